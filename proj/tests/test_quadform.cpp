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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "asq/gf.hpp"
#include "asq/linpoly.hpp"
#include "asq/quadform.hpp"

using namespace asq;

namespace {

LinPoly random_linpoly(const FieldRef& f, std::mt19937_64& rng, int maxtop,
                       bool base_coeffs = false) {
  std::vector<Element> s;
  const int top = static_cast<int>(rng() % static_cast<u64>(maxtop + 1));
  for (int i = 0; i <= top; ++i) {
    Element c = f->from_enc(rng() % f->size());
    if (base_coeffs) c = trace(c);  // projects into F_q
    s.push_back(c);
  }
  return linpoly_from_elements(f, std::move(s));
}

std::vector<u64> radical_roots(const LinPoly& S) {
  const LinPoly R = radical_polynomial(S);
  std::vector<u64> out;
  for (const Element& x : enumerate(S.ctx))
    if (lin_evaluate(R, x).is_zero()) out.push_back(x.enc());
  return out;
}

}  // namespace

TEST_CASE("form values and the zero-locus count") {
  const FieldRef f9 = field_create(3, 1, 2);
  const LinPoly id = linpoly_from_terms(f9, {{0, f9->one()}});
  u64 zeros = 0;
  for (const Element& x : enumerate(f9)) {
    CHECK(eval_Q(id, x) == trace(x * x));
    if (eval_Q(id, x).is_zero()) ++zeros;
  }
  CHECK(zeros == 5);
  CHECK(count_zero_trace(id) == 5);

  const LinPoly frob = linpoly_from_terms(f9, {{1, f9->one()}});
  CHECK(count_zero_trace(frob) == 1);

  const FieldRef f36 = field_create(3, 1, 6);
  const LinPoly frob6 = linpoly_from_terms(f36, {{1, f36->one()}});
  CHECK(count_zero_trace(frob6) == 225);

  // Seeded construction on the same field: s_0 = 1, s_2 = 2.
  const LinPoly seeded = linpoly_from_elements(
      f36, {f36->one(), f36->zero(), f36->from_int(2)});
  CHECK(count_zero_trace(seeded) == 405);
}

TEST_CASE("worker partitioning does not change the count") {
  std::mt19937_64 rng(4711);
  const FieldRef f = field_create(3, 1, 6);
  for (int it = 0; it < 10; ++it) {
    LinPoly S = random_linpoly(f, rng, 4);
    if (S.is_zero()) S = linpoly_from_terms(f, {{0, f->one()}});
    const u64 lone = count_zero_trace(S, kDefaultEnumCeiling, 1);
    CHECK(count_zero_trace(S, kDefaultEnumCeiling, 4) == lone);
    CHECK(count_zero_trace(S, kDefaultEnumCeiling, 64) == lone);
  }
}

TEST_CASE("counting respects the enumeration ceiling") {
  const FieldRef f = field_create(3, 1, 8, u64{1} << 20);
  const LinPoly S = linpoly_from_terms(f, {{0, f->one()}});
  CHECK_THROWS_AS(count_zero_trace(S, 100), ResourceLimitError);
  CHECK_THROWS_AS(radical_dimension(S, RadicalMethod::Brute, 100),
                  ResourceLimitError);
  CHECK_THROWS_AS(brute_bilinear_radical(S, 100), ResourceLimitError);
}

TEST_CASE("linear matrix realizes the map") {
  std::mt19937_64 rng(88);
  const FieldRef f = field_create(3, 2, 2);
  const int d = f->deg();
  std::vector<int> out(d);
  for (int it = 0; it < 40; ++it) {
    const LinPoly S = random_linpoly(f, rng, 3);
    const std::vector<int> A = linear_matrix(S);
    for (int rep = 0; rep < 10; ++rep) {
      const Element x = f->from_enc(rng() % f->size());
      f->vapply(A, x.c.data(), out.data());
      CHECK(f->venc(out.data()) == lin_evaluate(S, x).enc());
    }
  }
}

TEST_CASE("three radical methods agree") {
  std::mt19937_64 rng(515);
  for (const auto& [p, t, n] :
       std::vector<std::tuple<int, int, int>>{{3, 1, 4}, {5, 1, 2}, {3, 2, 2}, {3, 1, 6}}) {
    const FieldRef f = field_create(p, t, n);
    for (int it = 0; it < 25; ++it) {
      LinPoly S = random_linpoly(f, rng, n, /*base_coeffs=*/true);
      if (S.is_zero()) continue;
      const int w = radical_dimension(S, RadicalMethod::Matrix);
      CHECK(radical_dimension(S, RadicalMethod::Gcd) == w);
      CHECK(radical_dimension(S, RadicalMethod::Brute) == w);
      CHECK(0 <= w);
      CHECK(w <= n);
    }
    // Ambient coefficients leave the gcd route unavailable but not the rest.
    for (int it = 0; it < 25; ++it) {
      LinPoly S = random_linpoly(f, rng, n);
      if (S.is_zero()) continue;
      CHECK(radical_dimension(S, RadicalMethod::Matrix) ==
            radical_dimension(S, RadicalMethod::Brute));
    }
  }
}

TEST_CASE("zero form spans everything") {
  const FieldRef f = field_create(3, 1, 4);
  const LinPoly z = linpoly_zero(f);
  for (RadicalMethod m :
       {RadicalMethod::Matrix, RadicalMethod::Gcd, RadicalMethod::Brute})
    CHECK(radical_dimension(z, m) == 4);
  const FormReport rep = classify_form(z);
  CHECK(rep.w == 4);
  CHECK(rep.nq == 81);
  CHECK(rep.sign == '+');
  CHECK(rep.methods.size() == 3);
}

TEST_CASE("pairwise oracle equals the radical root set") {
  std::mt19937_64 rng(9119);
  for (const auto& [p, t, n] :
       std::vector<std::tuple<int, int, int>>{{3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {5, 1, 2}}) {
    const FieldRef f = field_create(p, t, n);
    for (int it = 0; it < 15; ++it) {
      LinPoly S = random_linpoly(f, rng, n + 1);
      if (S.is_zero()) S = linpoly_from_terms(f, {{0, f->one()}});
      std::vector<u64> brute = brute_bilinear_radical(S);
      std::vector<u64> roots = radical_roots(S);
      std::sort(brute.begin(), brute.end());
      std::sort(roots.begin(), roots.end());
      CHECK(brute == roots);
    }
  }
}

TEST_CASE("sign tracks the count formula branches") {
  const FieldRef f9 = field_create(3, 1, 2);
  const FormReport plus = classify_form(linpoly_from_terms(f9, {{0, f9->one()}}));
  CHECK(plus.w == 0);
  CHECK(plus.nq == 5);
  CHECK(plus.sign == '+');

  const FormReport minus = classify_form(linpoly_from_terms(f9, {{1, f9->one()}}));
  CHECK(minus.w == 0);
  CHECK(minus.nq == 1);
  CHECK(minus.sign == '-');

  const FieldRef f27 = field_create(3, 1, 3);
  const FormReport zero = classify_form(linpoly_from_terms(f27, {{0, f27->one()}}));
  CHECK(zero.w == 0);
  CHECK(zero.nq == 9);
  CHECK(zero.sign == '0');

  const FieldRef f36 = field_create(3, 1, 6);
  const FormReport seeded = classify_form(linpoly_from_elements(
      f36, {f36->one(), f36->zero(), f36->from_int(2)}));
  CHECK(seeded.w == 4);
  CHECK(seeded.nq == 405);
  CHECK(seeded.sign == '+');
  // Base-field coefficients and a small field: every method applies.
  CHECK(seeded.methods ==
        std::vector<std::string>{"matrix", "gcd", "brute"});

  const FormReport dent = classify_form(linpoly_from_terms(f36, {{1, f36->one()}}));
  CHECK(dent.w == 0);
  CHECK(dent.nq == 225);
  CHECK(dent.sign == '-');
}

TEST_CASE("every realized count obeys one of the two formula branches") {
  std::mt19937_64 rng(321);
  const FieldRef f = field_create(3, 1, 4);
  const u64 q = f->q();
  for (int it = 0; it < 120; ++it) {
    LinPoly S = random_linpoly(f, rng, 4);
    if (S.is_zero()) continue;
    const FormReport rep = classify_form(S);
    const u64 base = 27;
    if ((rep.n - rep.w) % 2 != 0) {
      CHECK(rep.sign == '0');
      CHECK(rep.nq == base);
    } else {
      u64 delta = (q - 1);
      for (int i = 0; i < (rep.n + rep.w) / 2 - 1; ++i) delta *= q;
      CHECK(rep.nq == (rep.sign == '+' ? base + delta : base - delta));
    }
  }
}
