/*
   Copyright 2026 the asq authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*/

#include "asq/families.hpp"

#include <stdexcept>

#include "asq/quadform.hpp"

namespace asq {

namespace {

void require_hyp(bool cond, const char* msg) {
  if (!cond) throw HypothesisError(msg);
}

u64 upow(u64 b, int e, const char* what) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul_u64(r, b, what);
  return r;
}

// Coefficient of a prime-field polynomial as a plain integer in [0, p).
int int_coeff(const UPoly& f, int i) {
  const Element c = f.coeff(i);
  return c.c.empty() ? 0 : c.c[0];
}

std::string kv(const char* key, u64 v) {
  return std::string(key) + "=" + std::to_string(v);
}

// Ambient-field checks shared by the coefficient-system operations: n = 2m
// with the top coefficient index exactly m - 1 and s_0 nonzero.
int system_shape(const LinPoly& S) {
  const FieldRef& ctx = S.ctx;
  require_hyp(ctx->n() % 2 == 0, "ambient extension degree must be even");
  const int m = ctx->n() / 2;
  require_hyp(m >= 2, "extension degree must be at least 4");
  require_hyp(!S.is_zero() && S.top_index() == m - 1,
              "coefficient support must end exactly at index m - 1");
  require_hyp(!S.coeff(0).is_zero(), "constant-index coefficient must be nonzero");
  return m;
}

bool system_rows_hold(const LinPoly& S, const Element& c, int m) {
  const FieldRef& ctx = S.ctx;
  const Element cq = frobenius(c, 1);
  const Element s0q = frobenius(S.coeff(0), 1);
  Element row = S.coeff(1) * cq + s0q * cq * cq + S.coeff(0);
  if (!row.is_zero()) return false;
  for (int i = 2; i <= m - 1; ++i) {
    const Element ci = frobenius(c, i);
    const Element mid =
        (i == 2) ? ctx->from_int(2) * s0q : frobenius(S.coeff(i - 2), 1);
    row = S.coeff(i) * ci + mid * cq + frobenius(S.coeff(i - 1), 1) * ci * cq +
          S.coeff(i - 1);
    if (!row.is_zero()) return false;
  }
  const Element cm = frobenius(c, m);
  row = frobenius(S.coeff(m - 2), 1) * cq +
        frobenius(S.coeff(m - 1), 1) * cm * cq + S.coeff(m - 1);
  if (!row.is_zero()) return false;
  const Element cs = c * S.coeff(m - 1);
  return (cs + frobenius(cs, m)).is_zero();
}

}  // namespace

std::pair<int, int> factor_prime_power(u64 q) {
  if (q > (u64{1} << 31))
    throw ResourceLimitError("q too large for any admissible field");
  if (q < 3 || q % 2 == 0) throw HypothesisError("q must be an odd prime power");
  u64 p = q;
  for (u64 f = 3; f * f <= q; f += 2)
    if (q % f == 0) {
      p = f;
      break;
    }
  int t = 0;
  u64 v = q;
  while (v % p == 0) {
    v /= p;
    ++t;
  }
  if (v != 1) throw HypothesisError("q must be a power of a single odd prime");
  return {static_cast<int>(p), t};
}

std::vector<u64> subfield_encs(const FieldRef& ctx, int d, u64 ceiling) {
  if (d < 1 || ctx->n() % d != 0)
    throw std::invalid_argument("subfield index must divide the extension degree");
  std::vector<u64> out;
  for (const Element& x : enumerate(ctx, ceiling))
    if (is_in_subfield(x, d)) out.push_back(x.enc());
  return out;
}

FamilyInstance cor_family(int variant, u64 q, int m, u64 seed_enc, u64 ceiling) {
  const auto [p, t] = factor_prime_power(q);
  switch (variant) {
    case 1:
      require_hyp(q % 4 == 3, "variant 1 needs q = 3 (mod 4)");
      require_hyp(m >= 1 && m % 2 == 1, "variant 1 needs odd m");
      break;
    case 2:
      require_hyp(q % 4 == 1, "variant 2 needs q = 1 (mod 4)");
      require_hyp(m >= 3 && m % 2 == 1, "variant 2 needs odd m >= 3");
      break;
    case 3:
      require_hyp(q % 4 == 1, "variant 3 needs q = 1 (mod 4)");
      require_hyp(m >= 2 && m % 2 == 0, "variant 3 needs even m >= 2");
      break;
    default:
      throw HypothesisError("unknown seeded-family variant");
  }
  const FieldRef ctx = field_create(p, t, 2 * m, ceiling);
  const Element seed = ctx->from_enc(seed_enc);
  require_hyp(!seed.is_zero(), "seed must be nonzero");
  require_hyp(is_in_subfield(seed, m), "seed must lie in the index-m subfield");

  std::vector<std::pair<int, Element>> terms;
  if (variant <= 2) {
    terms.emplace_back(0, seed);  // seed plays s_0
    for (int i = 2; i <= m - 1; i += 2) {
      const i64 e = static_cast<i64>((upow(q, i, "seed exponent") + 1) / 2);
      terms.emplace_back(i, ctx->from_int(2) * pow(seed, e));
    }
  } else {
    for (int i = 1; i <= m - 1; i += 2) {  // seed plays s_1
      const i64 e = static_cast<i64>((upow(q, i, "seed exponent") + 1) / (q + 1));
      terms.emplace_back(i, pow(seed, e));
    }
  }

  FamilyInstance inst;
  inst.name = "cor" + std::to_string(variant);
  inst.curve = make_curve(linpoly_from_terms(ctx, terms));
  inst.expected = {variant == 1 ? Verdict::Maximal : Verdict::Minimal};
  inst.expected_w = 2 * m - 2;
  inst.params = kv("q", q) + ";" + kv("m", m) + ";" + kv("seed", seed_enc);
  return inst;
}

FamilyInstance prop1_family(u64 q, int m, u64 seed_enc, u64 ceiling) {
  const auto [p, t] = factor_prime_power(q);
  require_hyp(m >= 1, "m must be positive");
  const FieldRef ctx = field_create(p, t, 2 * m, ceiling);
  const Element seed = ctx->from_enc(seed_enc);
  require_hyp(!seed.is_zero(), "seed must be nonzero");

  FamilyInstance inst;
  inst.name = "prop1";
  inst.curve = make_curve(linpoly_from_terms(ctx, {{m, seed}}));
  if (prop1_check(inst.curve.S, m)) {
    inst.expected = {Verdict::Maximal};
    inst.expected_w = 2 * m;  // the form vanishes identically
  } else {
    inst.expected = {Verdict::Minimal, Verdict::Ordinary};
  }
  inst.params = kv("q", q) + ";" + kv("m", m) + ";" + kv("seed", seed_enc);
  return inst;
}

bool prop1_check(const LinPoly& S, int m) {
  const FieldRef& ctx = S.ctx;
  require_hyp(m >= 1 && ctx->n() == 2 * m,
              "ambient extension degree must equal 2m");
  require_hyp(S.top_index() <= m, "coefficient support must end at index m");
  require_hyp(S.top_index() == m, "top coefficient s_m must be nonzero");
  for (int i = 0; i < m; ++i)
    if (!S.coeff(i).is_zero()) return false;
  const Element sm = S.coeff(m);
  return (sm + frobenius(sm, m)).is_zero();
}

bool thm1_system_check(const LinPoly& S, const Element& c) {
  const int m = system_shape(S);
  require_hyp(!c.is_zero(), "c must be nonzero");
  return system_rows_hold(S, c, m);
}

std::optional<Element> thm1_find_c(const LinPoly& S, u64 ceiling) {
  const int m = system_shape(S);
  for (const Element& c : enumerate(S.ctx, ceiling)) {
    if (c.is_zero()) continue;
    if (system_rows_hold(S, c, m)) return c;
  }
  return std::nullopt;
}

LinPoly thm1_reduce(const LinPoly& S, const Element& c) {
  const FieldRef ctx = S.ctx;
  require_hyp(!c.is_zero(), "c must be nonzero");
  require_hyp(ctx->n() % 2 == 0, "ambient extension degree must be even");
  const int m = ctx->n() / 2;
  require_hyp(!S.is_zero() && S.top_index() == m - 1,
              "coefficient support must end exactly at index m - 1");
  const int inv_frob = ctx->n() - 1;

  // Substituting x^q + cx for x turns the coefficient at index j into
  // t_j = s_{j-1} + s_j c^{q^j}; the Artin-Schreier change of variable
  // absorbs the q-th power of d_j = t_{j+1}^{1/q}.
  std::vector<Element> tc(m + 1, ctx->zero());
  for (int j = 0; j <= m; ++j) {
    Element v = (j >= 1) ? S.coeff(j - 1) : ctx->zero();
    v = v + S.coeff(j) * frobenius(c, j);
    tc[j] = v;
  }
  std::vector<Element> r(m + 1, ctx->zero());
  for (int j = 0; j <= m; ++j) {
    Element v = c * tc[j];
    if (j < m) v = v + frobenius(tc[j + 1], inv_frob);
    if (j == 1) v = v + c * S.coeff(0);
    r[j] = v;
  }
  return linpoly_from_elements(ctx, std::move(r));
}

CriterionResult minimal_criterion_check(const LinPoly& S, int k, int m) {
  CriterionResult res;
  res.w = radical_dimension(S, RadicalMethod::Matrix);
  bool hyp = !S.is_zero() && S.ctx->n() == 2 * m && k >= 1 && m >= 2 * k &&
             S.top_index() == m - k && !S.coeff(k).is_zero();
  if (hyp)
    for (int i = 0; i < k; ++i)
      if (!S.coeff(i).is_zero()) {
        hyp = false;
        break;
      }
  if (hyp && res.w == 2 * m - 2 * k) res.outcome = CriterionOutcome::Minimal;
  return res;
}

FamilyInstance thm41_curve(u64 q, int d, int k, int n, u64 ceiling) {
  const auto [p, t] = factor_prime_power(q);
  require_hyp(d > 2, "d must exceed 2");
  require_hyp(k >= 1 && k % d == 0, "d must divide k");
  require_hyp(n >= 2 && n % (2 * k) == 0, "2k must divide n");
  require_hyp(d % p != 0, "d must be prime to the characteristic");
  const int phi = euler_phi(d);
  require_hyp((k - phi) % 2 == 0 && k - phi >= 2,
              "k - phi(d) must be even and positive");
  const int a = (k - phi) / 2;

  const FieldRef ctx = field_create(p, t, n, ceiling);
  const UPoly cyc = cyclotomic(d, p);
  std::vector<std::pair<int, Element>> terms;
  for (int j = 0; 2 * k * j < n; ++j)
    for (int i = 0; i <= phi; ++i)
      if (const int ci = int_coeff(cyc, i))
        terms.emplace_back(i + a + k * j, ctx->from_int(ci));

  FamilyInstance inst;
  inst.name = "thm41";
  inst.curve = make_curve(linpoly_from_terms(ctx, terms));
  inst.expected = {Verdict::Minimal};
  inst.expected_w = n - 2 * a;
  inst.params = kv("q", q) + ";" + kv("d", d) + ";" + kv("k", k) + ";" + kv("n", n);
  return inst;
}

FamilyInstance thm42_curve(u64 q, int d, int k, int n, bool mirrored_c,
                           u64 ceiling) {
  const auto [p, t] = factor_prime_power(q);
  require_hyp(k >= 2 && k % 2 == 0, "k must be even");
  require_hyp(d >= 2 && k % d == 0, "d must divide k");
  require_hyp(d % p != 0, "d must be prime to the characteristic");
  const int phi = euler_phi(d);
  require_hyp(phi % 2 == 0, "phi(d) must be even");
  const int a = (2 * k - phi) / 2;
  require_hyp(n > k && (n - k) % (2 * k) == 0, "n must be k mod 2k and above k");

  const FieldRef ctx = field_create(p, t, n, ceiling);
  const UPoly cyc = cyclotomic(d, p);
  const auto half_coeff = [&](int i) {
    return int_coeff(cyc, mirrored_c ? phi - i : i);
  };
  std::vector<std::pair<int, Element>> terms;
  for (int j = 0; 2 * k * j < n - k; ++j)
    for (int i = 0; i <= phi; ++i)
      if (const int ci = int_coeff(cyc, i))
        terms.emplace_back(i + a + k * j, ctx->from_int(ci));
  for (int i = 0; i <= phi / 2 - 1; ++i)
    if (const int ci = half_coeff(i)) terms.emplace_back(k - a - i, ctx->from_int(ci));
  if (const int ci = half_coeff(phi / 2)) {
    const int half = (p + 1) / 2;  // 1/2 in F_p
    terms.emplace_back(0, ctx->from_int(static_cast<i64>(ci) * half));
  }

  FamilyInstance inst;
  inst.name = "thm42";
  inst.curve = make_curve(linpoly_from_terms(ctx, terms));
  inst.expected = {Verdict::Maximal, Verdict::Minimal};
  inst.expected_w = n - k + phi;
  inst.params = kv("q", q) + ";" + kv("d", d) + ";" + kv("k", k) + ";" +
                kv("n", n) + ";mirrored=" + (mirrored_c ? "1" : "0");
  inst.note =
      "extremal over the ambient field; minimal over its quadratic extension "
      "as a consequence";
  return inst;
}

namespace {

// Shared validation for the symmetric-divisor families; returns r.
int symmetric_divisor_shape(const UPoly& f, int k, int p) {
  require_hyp(!f.is_zero() && f.ctx->p() == p && f.ctx->deg() == 1,
              "f must be a prime-field polynomial in the right characteristic");
  require_hyp(check_symmetric_divisor(f, k),
              "f must be a symmetric divisor of x^k - 1");
  require_hyp(f.degree() < k, "deg f must be smaller than k");
  return f.degree() / 2;  // degree is even by the symmetry check
}

}  // namespace

FamilyInstance thm51_curve(u64 q, const UPoly& f, int k, int n, u64 ceiling) {
  const auto [p, t] = factor_prime_power(q);
  require_hyp(n >= 2 && n % 2 == 0, "n must be even");
  require_hyp(k % 4 == 2, "k must be 2 mod 4");
  require_hyp((n / 2) % k == 0, "k must divide n/2");
  const int r = symmetric_divisor_shape(f, k, p);

  const FieldRef ctx = field_create(p, t, n, ceiling);
  std::vector<std::pair<int, Element>> terms;
  for (int j = 0; 2 * k * j < n; ++j) {
    const int base = k * j + k / 2;
    terms.emplace_back(base, ctx->from_int(int_coeff(f, r)));
    for (int i = 1; i <= r; ++i) {
      const int ci = int_coeff(f, r + i);
      if (ci == 0) continue;
      terms.emplace_back(base - i, ctx->from_int(ci));
      terms.emplace_back(base + i, ctx->from_int(ci));
    }
  }

  FamilyInstance inst;
  inst.name = "thm51";
  inst.curve = make_curve(linpoly_from_terms(ctx, terms));
  inst.expected = {Verdict::Minimal};
  inst.expected_w = n - k + 2 * r;
  inst.expected_genus =
      checked_mul_u64((q - 1) / 2, upow(q, n / 2 - k / 2 + r, "genus"), "genus");
  inst.params = kv("q", q) + ";f=" + upoly_to_string(f) + ";" + kv("k", k) +
                ";" + kv("n", n);
  return inst;
}

FamilyInstance thm52_curve(u64 q, const UPoly& f, int k, int n, u64 ceiling) {
  const auto [p, t] = factor_prime_power(q);
  require_hyp(n >= 4 && n % 2 == 0, "n must be even and at least 4");
  require_hyp(k >= 1 && n % k == 0 && (n / k) % 2 == 1,
              "n must be an odd multiple of k");
  const int r = symmetric_divisor_shape(f, k, p);

  const FieldRef ctx = field_create(p, t, n, ceiling);
  std::vector<std::pair<int, Element>> terms;
  {
    const int half = (p + 1) / 2;
    const int ar = int_coeff(f, r);
    if (ar) terms.emplace_back(0, ctx->from_int(static_cast<i64>(ar) * half));
    for (int i = 1; i <= r; ++i)
      if (const int ci = int_coeff(f, r + i)) terms.emplace_back(i, ctx->from_int(ci));
  }
  for (int j = 0; 2 * k * j < n - k; ++j) {
    const int base = k * j + k;
    terms.emplace_back(base, ctx->from_int(int_coeff(f, r)));
    for (int i = 1; i <= r; ++i) {
      const int lo = int_coeff(f, r - i);
      const int hi = int_coeff(f, r + i);
      if (lo) terms.emplace_back(base - i, ctx->from_int(lo));
      if (hi) terms.emplace_back(base + i, ctx->from_int(hi));
    }
  }

  FamilyInstance inst;
  inst.name = "thm52";
  inst.curve = make_curve(linpoly_from_terms(ctx, terms));
  inst.expected = {Verdict::Maximal, Verdict::Minimal};
  inst.expected_w = n - k + 2 * r;
  inst.params = kv("q", q) + ";f=" + upoly_to_string(f) + ";" + kv("k", k) +
                ";" + kv("n", n);
  return inst;
}

}  // namespace asq
