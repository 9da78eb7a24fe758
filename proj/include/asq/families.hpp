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

// Named curve constructions with their promised verdicts, the maximality
// criterion loop (system check, search, reduction), and the minimality
// support criterion.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asq/curve.hpp"
#include "asq/upoly.hpp"

namespace asq {

// A constructed curve together with what its construction promises about
// it. Generation is pure; verification happens in the callers.
struct FamilyInstance {
  std::string name;
  Curve curve;
  std::vector<Verdict> expected;  // admissible verdicts, one or two entries
  int expected_w = -1;            // -1 when the construction fixes no value
  u64 expected_genus = 0;         // 0 when unspecified
  std::string params;             // flat "key=value;..." echo for reports
  std::string note;
};

// Splits an odd prime power q into (p, t); rejects anything else.
std::pair<int, int> factor_prime_power(u64 q);

// Ascending encodings of the subfield of index-d Frobenius fixed points.
std::vector<u64> subfield_encs(const FieldRef& ctx, int d,
                               u64 ceiling = kDefaultEnumCeiling);

// Seeded coefficient patterns over F_{q^{2m}} with seed in F_{q^m}.
// Variant 1 (q = 3 mod 4, m odd) promises a maximal curve; variants 2
// (q = 1 mod 4, m odd >= 3) and 3 (q = 1 mod 4, m even, seed = s_1)
// promise minimal ones. seed_enc is decoded in the ambient field.
FamilyInstance cor_family(int variant, u64 q, int m, u64 seed_enc,
                          u64 ceiling = kDefaultEnumCeiling);

// The monomial curve S = seed x^{q^m} over F_{q^{2m}}; maximal exactly
// when prop1_check accepts it.
FamilyInstance prop1_family(u64 q, int m, u64 seed_enc,
                            u64 ceiling = kDefaultEnumCeiling);

// True iff s_0 = ... = s_{m-1} = 0 and s_m + s_m^{q^m} = 0, which is
// equivalent to maximality over F_{q^{2m}} for S with s_m != 0.
bool prop1_check(const LinPoly& S, int m);

// The coefficient system whose solvability in c characterizes maximality
// for S with support 0..m-1, s_0 s_{m-1} != 0, over F_{q^{2m}}.
bool thm1_system_check(const LinPoly& S, const Element& c);

// Smallest-encoding nonzero c passing thm1_system_check, or nothing.
std::optional<Element> thm1_find_c(const LinPoly& S,
                                   u64 ceiling = kDefaultEnumCeiling);

// The substitution x -> x^q + cx rewritten on coefficients: returns R with
// x S(x) - (terms absorbed into the Artin-Schreier change of variable)
// = x R(x) up to y-substitution, so that when the system holds for c, R
// passes prop1_check. q-th roots are taken with the inverse Frobenius.
LinPoly thm1_reduce(const LinPoly& S, const Element& c);

enum class CriterionOutcome { Minimal, NotApplicable };

struct CriterionResult {
  CriterionOutcome outcome = CriterionOutcome::NotApplicable;
  int w = -1;  // measured radical dimension
};

// Support criterion: S with support inside [k, m-k], endpoints nonzero,
// m >= 2k, over F_{q^{2m}} is minimal when w = 2m - 2k. Hypothesis misses
// and unexpected w both come back NotApplicable with the measured w.
CriterionResult minimal_criterion_check(const LinPoly& S, int k, int m);

// Cyclotomic-coefficient constructions. thm41: shifted copies of the
// d-th cyclotomic pattern, minimal with w = n - 2a where 2a = k - phi(d).
FamilyInstance thm41_curve(u64 q, int d, int k, int n,
                           u64 ceiling = kDefaultEnumCeiling);

// thm42: the boundary case n = k mod 2k; adds a reflected half-pattern
// and a linear term. Promises an extremal curve with w = n - k + phi(d).
// The half-pattern coefficients admit two readings; mirrored_c selects
// the reversed one (they agree for palindromic cyclotomics).
FamilyInstance thm42_curve(u64 q, int d, int k, int n, bool mirrored_c = false,
                           u64 ceiling = kDefaultEnumCeiling);

// Symmetric-divisor constructions: f symmetric of degree 2r < k dividing
// x^k - 1 over F_p. thm51 (k = 2 mod 4, k | n/2) promises minimal with
// w = n - k + 2r and genus (q-1)/2 q^{n/2-k/2+r}; thm52 (n an odd
// multiple of k) promises an extremal curve with w = n - k + 2r.
FamilyInstance thm51_curve(u64 q, const UPoly& f, int k, int n,
                           u64 ceiling = kDefaultEnumCeiling);
FamilyInstance thm52_curve(u64 q, const UPoly& f, int k, int n,
                           u64 ceiling = kDefaultEnumCeiling);

}  // namespace asq
