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

#include "asq/linpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace asq {

namespace {

void trim(LinPoly& f) {
  while (!f.s.empty() && f.s.back().is_zero()) f.s.pop_back();
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Element LinPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(s.size())) return ctx->zero();
  return s[static_cast<size_t>(i)];
}

bool LinPoly::operator==(const LinPoly& o) const {
  if (!ctx->compatible(*o.ctx) || s.size() != o.s.size()) return false;
  for (size_t i = 0; i < s.size(); ++i)
    if (!(s[i] == o.s[i])) return false;
  return true;
}

LinPoly linpoly_zero(const FieldRef& ctx) { return LinPoly{ctx, {}}; }

LinPoly linpoly_from_elements(const FieldRef& ctx, std::vector<Element> coeffs) {
  for (const auto& e : coeffs) require(ctx->compatible(*e.ctx), "coefficient context mismatch");
  LinPoly f{ctx, std::move(coeffs)};
  trim(f);
  return f;
}

LinPoly linpoly_from_terms(const FieldRef& ctx,
                           const std::vector<std::pair<int, Element>>& terms) {
  int top = -1;
  for (const auto& [i, e] : terms) {
    require(i >= 0, "negative index");
    require(ctx->compatible(*e.ctx), "coefficient context mismatch");
    top = std::max(top, i);
  }
  std::vector<Element> coeffs(static_cast<size_t>(top) + 1, ctx->zero());
  for (const auto& [i, e] : terms) coeffs[static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i)] + e;
  return linpoly_from_elements(ctx, std::move(coeffs));
}

std::vector<std::pair<int, u64>> linpoly_terms(const LinPoly& S) {
  std::vector<std::pair<int, u64>> out;
  for (int i = 0; i <= S.top_index(); ++i)
    if (!S.s[static_cast<size_t>(i)].is_zero()) out.emplace_back(i, S.s[static_cast<size_t>(i)].enc());
  return out;
}

LinPoly lin_add(const LinPoly& a, const LinPoly& b) {
  require(a.ctx->compatible(*b.ctx), "context mismatch");
  std::vector<Element> coeffs;
  const int top = std::max(a.top_index(), b.top_index());
  for (int i = 0; i <= top; ++i) coeffs.push_back(a.coeff(i) + b.coeff(i));
  return linpoly_from_elements(a.ctx, std::move(coeffs));
}

LinPoly lin_scale(const LinPoly& a, const Element& c) {
  std::vector<Element> coeffs;
  coeffs.reserve(a.s.size());
  for (const auto& e : a.s) coeffs.push_back(e * c);
  return linpoly_from_elements(a.ctx, std::move(coeffs));
}

LinPoly lin_qpower(const LinPoly& a, int e) {
  require(e >= 0, "q-power shift must be nonnegative");
  if (a.is_zero()) return a;
  std::vector<Element> coeffs(a.s.size() + static_cast<size_t>(e), a.ctx->zero());
  for (size_t i = 0; i < a.s.size(); ++i)
    coeffs[i + static_cast<size_t>(e)] = frobenius(a.s[i], e);
  return linpoly_from_elements(a.ctx, std::move(coeffs));
}

Element lin_evaluate(const LinPoly& S, const Element& x) {
  require(S.ctx->compatible(*x.ctx), "context mismatch");
  Element acc = S.ctx->zero();
  for (int i = 0; i <= S.top_index(); ++i) {
    const Element& si = S.s[static_cast<size_t>(i)];
    if (si.is_zero()) continue;
    acc = acc + si * frobenius(x, i);
  }
  return acc;
}

LinPoly linearize(const UPoly& f, const FieldRef& ambient) {
  std::vector<Element> coeffs;
  coeffs.reserve(f.c.size());
  if (f.ctx->deg() == 1) {
    require(f.ctx->p() == ambient->p(), "characteristic mismatch");
    for (const auto& e : f.c) coeffs.push_back(ambient->from_int(static_cast<i64>(e.enc())));
  } else {
    require(f.ctx->compatible(*ambient), "polynomial field does not match the ambient field");
    for (const auto& e : f.c) {
      require(is_in_subfield(e, 1), "coefficient outside the base field");
      coeffs.push_back(e);
    }
  }
  return linpoly_from_elements(ambient, std::move(coeffs));
}

UPoly associate(const LinPoly& S) {
  std::vector<Element> coeffs;
  coeffs.reserve(S.s.size());
  for (const auto& e : S.s) {
    require(is_in_subfield(e, 1), "coefficient outside the base field");
    coeffs.push_back(e);
  }
  return upoly_from_elements(S.ctx, std::move(coeffs));
}

LinPoly radical_polynomial(const LinPoly& S) {
  require(!S.is_zero(), "radical polynomial of the zero polynomial");
  const int m = S.top_index();
  std::vector<std::pair<int, Element>> terms;
  for (int i = 0; i <= m - 1; ++i) {
    const Element c = S.coeff(m - i);
    if (!c.is_zero()) terms.emplace_back(i, frobenius(c, i));
  }
  {
    const Element s0 = S.coeff(0);
    if (!s0.is_zero())
      terms.emplace_back(m, S.ctx->from_int(2) * frobenius(s0, m));
  }
  for (int i = 1; i <= m; ++i) {
    const Element c = S.coeff(i);
    if (!c.is_zero()) terms.emplace_back(m + i, frobenius(c, m));
  }
  return linpoly_from_terms(S.ctx, terms);
}

}  // namespace asq
