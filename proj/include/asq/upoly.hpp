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

// Conventional univariate polynomials over a field context, plus cyclotomic
// polynomials and the symmetric divisors of x^k - 1 used by the curve
// constructions.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asq/gf.hpp"

namespace asq {

// Little-endian coefficients; empty vector is the zero polynomial and the
// leading coefficient of a nonzero polynomial is never zero.
struct UPoly {
  FieldRef ctx;
  std::vector<Element> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Element coeff(int i) const;

  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }
};

UPoly upoly_zero(const FieldRef& ctx);
UPoly upoly_from_elements(const FieldRef& ctx, std::vector<Element> coeffs);
UPoly upoly_from_ints(const FieldRef& ctx, const std::vector<i64>& coeffs);
// x^k + c0 style helper: x^k - 1.
UPoly upoly_xk_minus_one(const FieldRef& ctx, int k);

UPoly add(const UPoly& f, const UPoly& g);
UPoly sub(const UPoly& f, const UPoly& g);
UPoly mul(const UPoly& f, const UPoly& g);
UPoly scale(const UPoly& f, const Element& a);
std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g);
// Monic greatest common divisor; not both inputs zero.
UPoly poly_gcd(const UPoly& f, const UPoly& g);
UPoly monic(const UPoly& f);
bool divides(const UPoly& f, const UPoly& g);  // f | g exactly

// d-th cyclotomic polynomial reduced mod p, by recursive exact division of
// x^d - 1 by the lower cyclotomics. Requires gcd(d, p) = 1.
UPoly cyclotomic(int d, int p);
int euler_phi(int d);

// True iff f has even degree 2r, divides x^k - 1 exactly, and its
// coefficients satisfy a_{r-i} = a_{r+i} for i = 1..r.
bool check_symmetric_divisor(const UPoly& f, int k);

// Named stock polynomials satisfying the symmetric-divisor condition,
// together with the smallest admissible k. Kinds "iii" and "iv" use the
// spacing parameter s (s | r); kinds "v" and "vi" derive s from r and
// ignore the parameter.
struct FamilyPoly {
  UPoly f;
  int k;
};
FamilyPoly family_polynomial(const std::string& kind, int r, int s, int p);

// Human-readable syntax such as "x^4+2x^2+1"; coefficients are integers
// reduced into the prime subfield of ctx.
UPoly upoly_parse(const FieldRef& ctx, const std::string& text);
std::string upoly_to_string(const UPoly& f);

}  // namespace asq
