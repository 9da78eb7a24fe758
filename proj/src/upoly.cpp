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

#include "asq/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace asq {

namespace {

void trim(UPoly& f) {
  while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Element UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return ctx->zero();
  return c[static_cast<size_t>(i)];
}

bool UPoly::operator==(const UPoly& o) const {
  if (!ctx->compatible(*o.ctx) || c.size() != o.c.size()) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == o.c[i])) return false;
  return true;
}

UPoly upoly_zero(const FieldRef& ctx) { return UPoly{ctx, {}}; }

UPoly upoly_from_elements(const FieldRef& ctx, std::vector<Element> coeffs) {
  for (const auto& e : coeffs) require(ctx->compatible(*e.ctx), "coefficient context mismatch");
  UPoly f{ctx, std::move(coeffs)};
  trim(f);
  return f;
}

UPoly upoly_from_ints(const FieldRef& ctx, const std::vector<i64>& coeffs) {
  std::vector<Element> es;
  es.reserve(coeffs.size());
  for (i64 v : coeffs) es.push_back(ctx->from_int(v));
  return upoly_from_elements(ctx, std::move(es));
}

UPoly upoly_xk_minus_one(const FieldRef& ctx, int k) {
  require(k >= 1, "k must be positive");
  std::vector<Element> es(static_cast<size_t>(k) + 1, ctx->zero());
  es[0] = ctx->from_int(-1);
  es[static_cast<size_t>(k)] = ctx->one();
  return UPoly{ctx, std::move(es)};
}

UPoly add(const UPoly& f, const UPoly& g) {
  require(f.ctx->compatible(*g.ctx), "polynomial context mismatch");
  std::vector<Element> es;
  const size_t len = std::max(f.c.size(), g.c.size());
  es.reserve(len);
  for (size_t i = 0; i < len; ++i) es.push_back(f.coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i)));
  return upoly_from_elements(f.ctx, std::move(es));
}

UPoly sub(const UPoly& f, const UPoly& g) {
  require(f.ctx->compatible(*g.ctx), "polynomial context mismatch");
  std::vector<Element> es;
  const size_t len = std::max(f.c.size(), g.c.size());
  es.reserve(len);
  for (size_t i = 0; i < len; ++i) es.push_back(f.coeff(static_cast<int>(i)) - g.coeff(static_cast<int>(i)));
  return upoly_from_elements(f.ctx, std::move(es));
}

UPoly mul(const UPoly& f, const UPoly& g) {
  require(f.ctx->compatible(*g.ctx), "polynomial context mismatch");
  if (f.is_zero() || g.is_zero()) return upoly_zero(f.ctx);
  std::vector<Element> es(f.c.size() + g.c.size() - 1, f.ctx->zero());
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i].is_zero()) continue;
    for (size_t j = 0; j < g.c.size(); ++j) es[i + j] = es[i + j] + f.c[i] * g.c[j];
  }
  return upoly_from_elements(f.ctx, std::move(es));
}

UPoly scale(const UPoly& f, const Element& a) {
  std::vector<Element> es;
  es.reserve(f.c.size());
  for (const auto& e : f.c) es.push_back(e * a);
  return upoly_from_elements(f.ctx, std::move(es));
}

std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
  require(f.ctx->compatible(*g.ctx), "polynomial context mismatch");
  require(!g.is_zero(), "division by the zero polynomial");
  if (f.degree() < g.degree()) return {upoly_zero(f.ctx), f};
  const Element lead_inv = inv(g.c.back());
  std::vector<Element> rem = f.c;
  std::vector<Element> quot(static_cast<size_t>(f.degree() - g.degree()) + 1, f.ctx->zero());
  for (int k = f.degree() - g.degree(); k >= 0; --k) {
    const Element c = rem[static_cast<size_t>(k + g.degree())] * lead_inv;
    quot[static_cast<size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= g.degree(); ++i)
      rem[static_cast<size_t>(k + i)] = rem[static_cast<size_t>(k + i)] - c * g.c[static_cast<size_t>(i)];
  }
  rem.resize(static_cast<size_t>(std::max(g.degree(), 0)), f.ctx->zero());
  return {upoly_from_elements(f.ctx, std::move(quot)), upoly_from_elements(f.ctx, std::move(rem))};
}

UPoly monic(const UPoly& f) {
  if (f.is_zero()) return f;
  return scale(f, inv(f.c.back()));
}

UPoly poly_gcd(const UPoly& f, const UPoly& g) {
  require(!(f.is_zero() && g.is_zero()), "gcd of two zero polynomials");
  UPoly a = f, b = g;
  while (!b.is_zero()) {
    UPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

bool divides(const UPoly& f, const UPoly& g) {
  if (f.is_zero()) return g.is_zero();
  return divrem(g, f).second.is_zero();
}

int euler_phi(int d) {
  int result = d, m = d;
  for (int f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      result -= result / f;
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

UPoly cyclotomic(int d, int p) {
  require(d >= 1, "d must be positive");
  require(p >= 3, "p must be an odd prime");
  require(d % p != 0, "d must not be divisible by p");
  const FieldRef fp = field_create(p, 1, 1);
  // Phi_d = (x^d - 1) / prod over proper divisors e of Phi_e.
  UPoly num = upoly_xk_minus_one(fp, d);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto [quo, rem] = divrem(num, cyclotomic(e, p));
    if (!rem.is_zero()) throw std::logic_error("cyclotomic division not exact");
    num = std::move(quo);
  }
  if (num.degree() != euler_phi(d)) throw std::logic_error("cyclotomic degree mismatch");
  return num;
}

bool check_symmetric_divisor(const UPoly& f, int k) {
  require(k >= 1, "k must be positive");
  require(!f.is_zero(), "zero polynomial");
  require(f.degree() % 2 == 0 && f.degree() >= 2, "degree must be even and positive");
  const int r = f.degree() / 2;
  for (int i = 1; i <= r; ++i)
    if (!(f.coeff(r - i) == f.coeff(r + i))) return false;
  return divides(f, upoly_xk_minus_one(f.ctx, k));
}

FamilyPoly family_polynomial(const std::string& kind, int r, int s, int p) {
  require(r >= 1, "r must be positive");
  require(s >= 1, "s must be positive");
  require(p >= 3, "p must be an odd prime");
  const FieldRef fp = field_create(p, 1, 1);
  std::vector<i64> a;
  int k = 0;
  if (kind == "i") {
    a.assign(static_cast<size_t>(2 * r) + 1, 1);
    k = 2 * r + 1;
  } else if (kind == "ii") {
    a.resize(static_cast<size_t>(2 * r) + 1);
    for (int i = 0; i <= 2 * r; ++i) a[static_cast<size_t>(i)] = (i % 2 == 0) ? 1 : -1;
    k = 2 * (2 * r + 1);
  } else if (kind == "iii" || kind == "iv") {
    require(r % s == 0, "s must divide r");
    a.assign(static_cast<size_t>(2 * r) + 1, 0);
    for (int i = 0; i <= 2 * r / s; ++i)
      a[static_cast<size_t>(i * s)] = (kind == "iii" || i % 2 == 0) ? 1 : -1;
    // f*(x^s -+ 1) telescopes to x^{2r+s} -+ 1, so the true period is
    // 2r+s (resp. twice that), independent of the characteristic.
    k = (kind == "iii") ? 2 * r + s : 2 * (2 * r + s);
  } else if (kind == "v" || kind == "vi") {
    require(r >= 2, "kind v/vi requires r >= 2");
    a.assign(static_cast<size_t>(2 * r) + 1, 0);
    a[0] = 1;
    a[static_cast<size_t>(2 * r)] = 1;
    for (int i = 2; i <= 2 * r - 2; ++i)
      a[static_cast<size_t>(i)] = (kind == "v" || i % 2 == 0) ? 1 : -1;
    const int sv = (r % 3 == 2) ? 2 : 6;
    k = sv * (2 * r - 1);
  } else {
    throw std::invalid_argument("unknown family polynomial kind: " + kind);
  }
  FamilyPoly out{upoly_from_ints(fp, a), k};
  if (!check_symmetric_divisor(out.f, out.k))
    throw std::logic_error("family polynomial fails its own symmetry/divisibility condition");
  return out;
}

UPoly upoly_parse(const FieldRef& ctx, const std::string& text) {
  // Terms of the form [coef][x[^exp]] joined by + or -.
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  require(!s.empty(), "empty polynomial text");
  std::vector<i64> coeffs;
  auto bump = [&](int e, i64 v) {
    if (e >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(e) + 1, 0);
    coeffs[static_cast<size_t>(e)] += v;
  };
  size_t i = 0;
  while (i < s.size()) {
    i64 sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    require(i < s.size(), "dangling sign in polynomial text");
    i64 coef = 1;
    bool saw_digits = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = coef * 10 + (s[i] - '0');
        ++i;
      }
      saw_digits = true;
    }
    int exp = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])), "missing exponent");
        exp = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          exp = exp * 10 + (s[i] - '0');
          ++i;
        }
      }
    } else {
      require(saw_digits, "expected coefficient or x in polynomial text");
    }
    bump(exp, sign * coef);
  }
  return upoly_from_ints(ctx, coeffs);
}

std::string upoly_to_string(const UPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Element e = f.coeff(i);
    if (e.is_zero()) continue;
    const u64 v = e.enc();
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(v);
    } else {
      if (v != 1) out += std::to_string(v);
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace asq
