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

// q-linearized polynomials S(x) = sum s_i x^{q^i}: evaluation, the
// correspondence with conventional polynomials, and the radical polynomial
// whose roots form the radical of the quadratic form Tr(xS(x)).

#pragma once

#include <utility>
#include <vector>

#include "asq/gf.hpp"
#include "asq/upoly.hpp"

namespace asq {

// Coefficient s[i] multiplies x^{q^i}. Indices are formal: they are kept
// unreduced (the top index may exceed n) and evaluation reduces them mod n.
// Trimmed so the top coefficient of a nonzero polynomial is never zero.
struct LinPoly {
  FieldRef ctx;
  std::vector<Element> s;

  int top_index() const { return static_cast<int>(s.size()) - 1; }
  bool is_zero() const { return s.empty(); }
  Element coeff(int i) const;

  bool operator==(const LinPoly& o) const;
  bool operator!=(const LinPoly& o) const { return !(*this == o); }
};

LinPoly linpoly_zero(const FieldRef& ctx);
LinPoly linpoly_from_elements(const FieldRef& ctx, std::vector<Element> coeffs);
// Sparse constructor from (index, element) terms; repeated indices add up.
LinPoly linpoly_from_terms(const FieldRef& ctx,
                           const std::vector<std::pair<int, Element>>& terms);
std::vector<std::pair<int, u64>> linpoly_terms(const LinPoly& S);

LinPoly lin_add(const LinPoly& a, const LinPoly& b);
LinPoly lin_scale(const LinPoly& a, const Element& c);
// S(x)^{q^e} as a linearized polynomial: coefficients s_i^{q^e} at index i+e.
LinPoly lin_qpower(const LinPoly& a, int e);

Element lin_evaluate(const LinPoly& S, const Element& x);

// Index transport a_k x^k -> a_k x^{q^k}. f may live over the prime field
// (coefficients embed as integers) or over ambient itself with coefficients
// in F_q.
LinPoly linearize(const UPoly& f, const FieldRef& ambient);
// Inverse transport; every coefficient of S must lie in F_q.
UPoly associate(const LinPoly& S);

// The linearized polynomial whose root set in F_{q^n} is the radical
// {a : B(a,b) = 0 for all b} of Tr(xS(x)). For top index m:
//   sum_{i=0}^{m-1} s_{m-i}^{q^i} x^{q^i}
//   + 2 s_0^{q^m} x^{q^m}
//   + sum_{i=1}^{m} s_i^{q^m} x^{q^{m+i}}.
// Throws on zero input.
LinPoly radical_polynomial(const LinPoly& S);

}  // namespace asq
