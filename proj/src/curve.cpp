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

#include "asq/curve.hpp"

#include <stdexcept>

#include "asq/quadform.hpp"

namespace asq {

namespace {

using u128 = unsigned __int128;

u64 isqrt128(u128 v) {
  // Bit-by-bit descent; any u64 can be the root, so a binary search over
  // the full range would overflow its midpoint arithmetic.
  u64 r = 0;
  for (int b = 63; b >= 0; --b) {
    const u64 cand = r | (u64{1} << b);
    if (static_cast<u128>(cand) * cand <= v) r = cand;
  }
  return r;
}

u64 pow_u64(u64 b, int e, const char* what) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul_u64(r, b, what);
  return r;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Maximal:
      return "Maximal";
    case Verdict::Minimal:
      return "Minimal";
    case Verdict::Ordinary:
      return "Ordinary";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Curve make_curve(const LinPoly& S) {
  if (S.is_zero()) throw std::invalid_argument("curve requires a nonzero S");
  LinPoly trimmed = S;
  while (!trimmed.s.empty() && trimmed.s.back().is_zero()) trimmed.s.pop_back();
  return Curve{S.ctx, std::move(trimmed)};
}

u64 genus(const Curve& c) {
  const u64 q = c.ctx->q();
  const int m = c.S.top_index();
  return checked_mul_u64((q - 1) / 2, pow_u64(q, m, "genus"), "genus");
}

u64 point_count(const Curve& c, u64 ceiling, int workers) {
  const u64 nq = count_zero_trace(c.S, ceiling, workers);
  return 1 + checked_mul_u64(c.ctx->q(), nq, "point count");
}

u64 direct_count_oracle(const Curve& c, u64 ceiling) {
  const FieldRef ctx = c.ctx;
  const u64 size = ctx->size();
  if (size > ceiling)
    throw ResourceLimitError("field too large for the direct pair-counting oracle");
  const int d = ctx->deg(), p = ctx->p();
  const std::vector<int> A = linear_matrix(c.S);
  const std::vector<int>& F1 = ctx->frob_matrix(1);

  // Value tables: how often x S(x) and y^q - y hit each field element.
  std::vector<u64> cx(size, 0), cy(size, 0);
  std::vector<int> v(d, 0), img(d), prod(d), scratch(2 * d);
  for (u64 e = 0; e < size; ++e) {
    ctx->vapply(A, v.data(), img.data());
    ctx->vmul(v.data(), img.data(), prod.data(), scratch.data());
    ++cx[ctx->venc(prod.data())];
    for (int i = 0; i < d; ++i) {
      if (++v[i] == p)
        v[i] = 0;
      else
        break;
    }
  }
  std::fill(v.begin(), v.end(), 0);
  for (u64 e = 0; e < size; ++e) {
    ctx->vapply(F1, v.data(), img.data());
    ctx->vsub(img.data(), v.data(), prod.data());
    ++cy[ctx->venc(prod.data())];
    for (int i = 0; i < d; ++i) {
      if (++v[i] == p)
        v[i] = 0;
      else
        break;
    }
  }
  u64 total = 1;  // the unique place at infinity
  for (u64 e = 0; e < size; ++e) total += cx[e] * cy[e];
  return total;
}

namespace {

// Fills bounds and verdict from N, g, and the ambient field size.
void apply_bounds(CurveReport& rep, const FieldRef& ctx, bool have_count) {
  const u64 Q = ctx->size();
  const u128 disc = static_cast<u128>(4) * rep.g * rep.g * Q;
  const u64 B = isqrt128(disc);  // floor(2 g sqrt(Q))
  rep.bounds_exact = static_cast<u128>(B) * B == disc;
  const u128 up = static_cast<u128>(Q) + 1 + B;
  if (up > static_cast<u128>(~0ull))
    throw ResourceLimitError("Hasse-Weil bound exceeds the integer range");
  rep.upper = static_cast<u64>(up);
  rep.lower = (Q + 1 > B) ? Q + 1 - B : 0;
  if (!have_count) return;
  if (rep.N < rep.lower || rep.N > rep.upper)
    throw std::logic_error("point count escapes the Hasse-Weil bounds");
  if (rep.bounds_exact && rep.N == rep.upper)
    rep.verdict = Verdict::Maximal;
  else if (rep.bounds_exact && rep.N == rep.lower)
    rep.verdict = Verdict::Minimal;
  else
    rep.verdict = Verdict::Ordinary;
}

CurveReport report_base(const Curve& c) {
  CurveReport rep;
  rep.p = c.ctx->p();
  rep.t = c.ctx->t();
  rep.n = c.ctx->n();
  rep.S = linpoly_terms(c.S);
  rep.g = genus(c);
  rep.w = radical_dimension(c.S, RadicalMethod::Matrix);
  return rep;
}

}  // namespace

CurveReport classify(const Curve& c, u64 ceiling, int workers) {
  CurveReport rep = report_base(c);
  rep.nq = count_zero_trace(c.S, ceiling, workers);
  rep.N = 1 + checked_mul_u64(c.ctx->q(), rep.nq, "point count");
  apply_bounds(rep, c.ctx, true);
  return rep;
}

CurveReport classify_predict(const Curve& c) {
  CurveReport rep = report_base(c);
  apply_bounds(rep, c.ctx, false);
  const u64 q = c.ctx->q();
  const int n = c.ctx->n();
  const u64 center = 1 + pow_u64(q, n, "count prediction");
  if ((n - rep.w) % 2 != 0) {
    rep.candidates = {center};
  } else {
    const u64 delta =
        checked_mul_u64(q - 1, pow_u64(q, (n + rep.w) / 2, "count prediction"),
                        "count prediction");
    if (center > delta) rep.candidates.push_back(center - delta);
    rep.candidates.push_back(center + delta);
  }
  return rep;
}

}  // namespace asq
