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

// The quadratic form Q(x) = Tr(x S(x)): pointwise evaluation, zero counting,
// and the radical dimension w by three independent methods.

#pragma once

#include <string>
#include <vector>

#include "asq/gf.hpp"
#include "asq/linpoly.hpp"

namespace asq {

enum class RadicalMethod { Matrix, Gcd, Brute };

struct FormReport {
  int p = 0, t = 0, n = 0;
  std::vector<std::pair<int, u64>> S;  // (index, encoding) terms
  int w = 0;
  u64 nq = 0;
  // '+' or '-' when n-w is even (which of the two admissible counts is
  // realized); '0' when n-w is odd and the count is exactly q^{n-1}.
  char sign = '0';
  std::vector<std::string> methods;  // radical methods that ran and agreed
};

Element eval_Q(const LinPoly& S, const Element& x);

// |{x : Tr(x S(x)) = 0}| by full enumeration. The loop partitions across
// workers by encoding range; the result does not depend on the partition.
u64 count_zero_trace(const LinPoly& S, u64 ceiling = kDefaultEnumCeiling,
                     int workers = 1);

// Dimension of the radical over F_q. Matrix: kernel rank of the radical
// polynomial's F_p-matrix. Gcd: degree of gcd(associate, x^n - 1), valid
// when the radical polynomial has base-field coefficients. Brute: root
// count by enumeration.
int radical_dimension(const LinPoly& S, RadicalMethod method,
                      u64 ceiling = kDefaultEnumCeiling);

// Runs every applicable radical method, checks agreement, counts zeros,
// and validates the count against the two-value formula for w.
FormReport classify_form(const LinPoly& S, u64 ceiling = kDefaultEnumCeiling,
                         int workers = 1);

// Ascending encodings of {a : Q(a+b) - Q(a) - Q(b) = 0 for all b}, computed
// from Q values alone. Independent of radical_polynomial; used as the
// cross-check oracle for it.
std::vector<u64> brute_bilinear_radical(const LinPoly& S,
                                        u64 ceiling = kDefaultPairOracleCeiling);

// Row-major deg x deg matrix over F_p of the map x -> S(x).
std::vector<int> linear_matrix(const LinPoly& S);

}  // namespace asq
