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

// The curve y^q - y = x S(x): genus, point count over the ambient field,
// and classification against the Hasse-Weil bounds.

#pragma once

#include <string>
#include <vector>

#include "asq/gf.hpp"
#include "asq/linpoly.hpp"

namespace asq {

enum class Verdict { Maximal, Minimal, Ordinary, Unknown };

const char* verdict_name(Verdict v);

struct Curve {
  FieldRef ctx;
  LinPoly S;  // nonzero, trailing zero coefficients trimmed
};

// Rejects a zero S: the equation would be reducible and the genus formula
// meaningless.
Curve make_curve(const LinPoly& S);

// (q-1)/2 * q^m with m the top coefficient index of S.
u64 genus(const Curve& c);

// 1 + q * |{x : Tr(x S(x)) = 0}|, by enumeration.
u64 point_count(const Curve& c, u64 ceiling = kDefaultEnumCeiling,
                int workers = 1);

// Counts solutions (x, y) of y^q - y = x S(x) directly, one pass per
// variable over value tables, plus the single point at infinity. Shares no
// counting logic with point_count.
u64 direct_count_oracle(const Curve& c, u64 ceiling = kDefaultPairOracleCeiling);

struct CurveReport {
  int p = 0, t = 0, n = 0;
  std::vector<std::pair<int, u64>> S;
  u64 g = 0;
  int w = 0;
  u64 N = 0;
  u64 lower = 0, upper = 0;  // integer Hasse-Weil bounds (floored when irrational)
  bool bounds_exact = false;
  Verdict verdict = Verdict::Unknown;
  u64 nq = 0;
  std::vector<u64> candidates;  // predicted point counts (predict mode only)
};

// Full classification by enumeration. Maximal / Minimal exactly when N
// attains a bound, and only when the bound itself is an integer.
CurveReport classify(const Curve& c, u64 ceiling = kDefaultEnumCeiling,
                     int workers = 1);

// Radical-only prediction: no enumeration; fills w, genus, bounds, and the
// one or two point counts admitted by the count formula. Verdict stays
// Unknown.
CurveReport classify_predict(const Curve& c);

}  // namespace asq
