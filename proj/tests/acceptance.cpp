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

// End-to-end acceptance gate. Each criterion prints exactly one PASS or
// FAIL line with its wall time; the process exits nonzero if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "asq/curve.hpp"
#include "asq/families.hpp"
#include "asq/gf.hpp"
#include "asq/linpoly.hpp"
#include "asq/quadform.hpp"
#include "asq/upoly.hpp"

using namespace asq;

namespace {

struct Tested {
  Curve curve;
  CurveReport rep;
};

std::vector<Tested> g_registry;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// budget < 0 means no wall-clock requirement.
void report(int id, bool ok, double secs, double budget,
            const std::string& detail) {
  if (budget >= 0 && secs >= budget) ok = false;
  if (!ok) ++g_failures;
  std::printf("%s criterion %2d: %s [%.2fs%s]\n", ok ? "PASS" : "FAIL", id,
              detail.c_str(), secs,
              budget >= 0 ? (" of " + std::to_string((int)budget) + "s").c_str()
                          : "");
  std::fflush(stdout);
}

CurveReport classify_and_register(const Curve& c) {
  CurveReport rep = classify(c);
  g_registry.push_back({c, rep});
  return rep;
}

u64 upow(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul_u64(r, b, "power");
  return r;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "q=3 m=3 seeded maximal instance";
  try {
    const FamilyInstance inst = cor_family(1, 3, 3, 1);
    const CurveReport rep = classify_and_register(inst.curve);
    ok = rep.N == 1216 && rep.verdict == Verdict::Maximal && rep.w == 4;
    detail += " N=" + std::to_string(rep.N) + " w=" + std::to_string(rep.w) +
              " " + verdict_name(rep.verdict);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(1, ok, seconds_since(t0), 1.0, detail);
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int maximal = 0, displaced = 0;
  std::string detail;
  try {
    const FieldRef ctx = field_create(3, 1, 6);
    const std::vector<u64> sub = subfield_encs(ctx, 3);
    std::vector<u64> nz(sub.begin() + 1, sub.end());
    for (u64 enc : nz) {
      const CurveReport rep = classify_and_register(cor_family(1, 3, 3, enc).curve);
      if (rep.verdict == Verdict::Maximal) ++maximal;
    }
    ok = maximal == 26;

    // Perturb one coefficient inside the index-3 subfield, keeping the
    // endpoints nonzero, and demand the verdict move off Maximal.
    std::mt19937_64 rng(1);
    auto pattern = [&](const Element& seed) {
      std::vector<Element> s(3, ctx->zero());
      s[0] = seed;
      s[2] = ctx->from_int(2) * pow(seed, (9 + 1) / 2);
      return s;
    };
    for (int trial = 0; trial < 20;) {
      const Element seed = ctx->from_enc(nz[rng() % nz.size()]);
      std::vector<Element> s = pattern(seed);
      const int i = static_cast<int>(rng() % 3);
      Element val = ctx->zero();
      do {
        const u64 enc = (i == 0 || i == 2) ? nz[rng() % nz.size()]
                                           : sub[rng() % sub.size()];
        val = ctx->from_enc(enc);
      } while (val == s[static_cast<size_t>(i)]);
      s[static_cast<size_t>(i)] = val;
      // Re-formed pattern vectors are skipped (cannot happen for the
      // perturbed index itself, but keep the guard symmetrical).
      if (!s[0].is_zero() && is_in_subfield(s[0], 3) && s == pattern(s[0]))
        continue;
      const CurveReport rep =
          classify_and_register(make_curve(linpoly_from_elements(ctx, s)));
      if (rep.verdict != Verdict::Maximal) ++displaced;
      ++trial;
    }
    ok = ok && displaced == 20;
    detail = "sweep 26 seeds maximal=" + std::to_string(maximal) +
             ", 20 perturbations displaced=" + std::to_string(displaced);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("threw: ") + e.what();
  }
  report(2, ok, seconds_since(t0), 10.0, detail);
}

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "q=5 m=3 seeded minimal instance";
  try {
    const CurveReport rep = classify_and_register(cor_family(2, 5, 3, 1).curve);
    ok = rep.N == 3126 && rep.verdict == Verdict::Minimal;
    detail += " N=" + std::to_string(rep.N) + " " + verdict_name(rep.verdict);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(3, ok, seconds_since(t0), 5.0, detail);
}

void criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "q=5 m=2 seeded minimal instance";
  try {
    const CurveReport rep = classify_and_register(cor_family(3, 5, 2, 1).curve);
    ok = rep.N == 126 && rep.verdict == Verdict::Minimal;
    detail += " N=" + std::to_string(rep.N) + " " + verdict_name(rep.verdict);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(4, ok, seconds_since(t0), 1.0, detail);
}

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "single-term maximal instance over the 9-element field";
  try {
    const FieldRef f9 = field_create(3, 1, 2);
    u64 root = 0;
    for (const Element& x : enumerate(f9)) {
      if ((x * x + f9->one()).is_zero()) {
        root = x.enc();
        break;
      }
    }
    ok = root != 0;
    const FamilyInstance inst = prop1_family(3, 1, root);
    ok = ok && prop1_check(inst.curve.S, 1);
    const CurveReport rep = classify_and_register(inst.curve);
    ok = ok && rep.N == 28 && rep.verdict == Verdict::Maximal;
    // The unit seed must fail the vanishing test and miss maximality.
    const FamilyInstance unit = prop1_family(3, 1, 1);
    ok = ok && !prop1_check(unit.curve.S, 1);
    const CurveReport urep = classify_and_register(unit.curve);
    ok = ok && urep.verdict != Verdict::Maximal;
    detail += " N=" + std::to_string(rep.N) + " " + verdict_name(rep.verdict);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(5, ok, seconds_since(t0), -1.0, detail);
}

void criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "cyclotomic family d=4 k=4 n=8";
  try {
    const CurveReport rep = classify_and_register(thm41_curve(3, 4, 4, 8).curve);
    ok = rep.N == 2188 && rep.w == 6 && rep.verdict == Verdict::Minimal;
    detail += " N=" + std::to_string(rep.N) + " w=" + std::to_string(rep.w) +
              " " + verdict_name(rep.verdict);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(6, ok, seconds_since(t0), 1.0, detail);
}

void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "symmetric-divisor family k=6 n=12";
  try {
    const FieldRef fp3 = field_create(3, 1, 1);
    const FamilyInstance inst =
        thm51_curve(3, upoly_from_ints(fp3, {1, 1, 1}), 6, 12);
    const CurveReport rep = classify_and_register(inst.curve);
    ok = rep.N == 413344 && rep.w == 8 && rep.g == 81 &&
         rep.verdict == Verdict::Minimal && inst.expected_genus == 81;
    detail += " N=" + std::to_string(rep.N) + " w=" + std::to_string(rep.w) +
              " g=" + std::to_string(rep.g) + " " + verdict_name(rep.verdict);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(7, ok, seconds_since(t0), 60.0, detail);
}

void criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "boundary cyclotomic family d=4 k=4 n=12";
  try {
    const FamilyInstance inst = thm42_curve(3, 4, 4, 12);
    const CurveReport rep = classify_and_register(inst.curve);
    const CurveReport again = classify(inst.curve);
    ok = rep.w == 10 && (rep.N == 177148 || rep.N == 885736) &&
         rep.N == again.N && rep.N == 177148;
    detail += " w=" + std::to_string(rep.w) +
              " realized N=" + std::to_string(rep.N) + " (" +
              verdict_name(rep.verdict) + "), stable across reruns";
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(8, ok, seconds_since(t0), 60.0, detail);
}

void criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "symmetric-divisor boundary family k=6 n=6";
  try {
    const FieldRef fp3 = field_create(3, 1, 1);
    const FamilyInstance inst =
        thm52_curve(3, upoly_from_ints(fp3, {1, 1, 1}), 6, 6);
    const CurveReport rep = classify_and_register(inst.curve);
    ok = rep.w == 2 && (rep.N == 568 || rep.N == 892) && rep.N == 892;
    detail += " w=" + std::to_string(rep.w) +
              " realized N=" + std::to_string(rep.N) + " (" +
              verdict_name(rep.verdict) + ")";
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(9, ok, seconds_since(t0), 1.0, detail);
}

void criterion10() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "coefficient-system search, reduction, and exhaustion";
  try {
    const LinPoly S = cor_family(1, 3, 3, 1).curve.S;
    const auto c = thm1_find_c(S);
    ok = c.has_value();
    if (ok) {
      const FieldRef& f = S.ctx;
      ok = (*c * *c + f->one()).is_zero() && thm1_system_check(S, *c);
      const LinPoly R = thm1_reduce(S, *c);
      ok = ok && prop1_check(R, 3);
    }
    // The q = 1 (mod 4) seeded pattern admits no solution at all.
    ok = ok && !thm1_find_c(cor_family(2, 5, 3, 1).curve.S).has_value();
    detail += ok ? ": c^2 = -1, reduced form passes, q=5 pattern exhausts"
                 : ": chain broken";
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" threw: ") + e.what();
  }
  report(10, ok, seconds_since(t0), -1.0, detail);
}

void criterion11() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int tested = 0;
  std::string detail;
  try {
    std::mt19937_64 rng(11);
    const std::vector<std::array<int, 3>> shapes = {
        {3, 1, 4}, {3, 1, 6}, {5, 1, 4}};
    for (const auto& sh : shapes) {
      const FieldRef ctx = field_create(sh[0], sh[1], sh[2]);
      const int n = ctx->n();
      for (int it = 0; it < 12 && ok; ++it) {
        const bool base_only = it >= 8;
        std::vector<Element> s(static_cast<size_t>(n), ctx->zero());
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
          u64 enc = rng() % ctx->size();
          if (base_only) enc %= static_cast<u64>(sh[0]);
          if (rng() % 3 == 0) enc = 0;  // keep supports sparse sometimes
          s[static_cast<size_t>(i)] = ctx->from_enc(enc);
          nonzero = nonzero || enc != 0;
        }
        if (!nonzero) s[0] = ctx->one();
        const LinPoly S = linpoly_from_elements(ctx, s);

        // Root set of the radical polynomial vs the pairwise bilinear
        // radical, element by element.
        const LinPoly R = radical_polynomial(S);
        std::vector<u64> roots;
        for (const Element& x : enumerate(ctx))
          if (lin_evaluate(R, x).is_zero()) roots.push_back(x.enc());
        std::vector<u64> brute = brute_bilinear_radical(S);
        std::sort(roots.begin(), roots.end());
        std::sort(brute.begin(), brute.end());
        ok = ok && roots == brute;

        // All applicable dimension methods agree (classify_form throws on
        // any disagreement and cross-checks the count formula).
        const FormReport fr = classify_form(S);
        ok = ok && std::find(fr.methods.begin(), fr.methods.end(), "matrix") !=
                       fr.methods.end();
        ok = ok && std::find(fr.methods.begin(), fr.methods.end(), "brute") !=
                       fr.methods.end();
        if (base_only)
          ok = ok && std::find(fr.methods.begin(), fr.methods.end(), "gcd") !=
                         fr.methods.end();
        ++tested;
      }
    }
    detail = "radical agreement on " + std::to_string(tested) +
             " random forms across three fields";
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("threw: ") + e.what();
  }
  report(11, ok, seconds_since(t0), 60.0, detail);
}

void criterion12() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int direct = 0;
  std::string detail;
  try {
    for (const Tested& t : g_registry) {
      const FieldRef& ctx = t.curve.ctx;
      const u64 q = ctx->q();
      const int n = ctx->n();
      ok = ok && t.rep.N == 1 + checked_mul_u64(q, t.rep.nq, "point count");

      // Two-value shape: the zero count is determined by w up to sign.
      const int r = n - t.rep.w;
      const u64 main = upow(q, n - 1);
      if (r % 2 != 0) {
        ok = ok && t.rep.nq == main;
      } else {
        const u64 dev = checked_mul_u64(q - 1, upow(q, (n + t.rep.w) / 2 - 1),
                                        "deviation");
        ok = ok && (t.rep.nq == main + dev || t.rep.nq == main - dev);
      }

      if (ctx->size() <= kDefaultPairOracleCeiling) {
        ok = ok && direct_count_oracle(t.curve) == t.rep.N;
        ++direct;
      }
      if (!ok) break;
    }
    detail = "registry of " + std::to_string(g_registry.size()) +
             " curves consistent; " + std::to_string(direct) +
             " re-counted by the pairwise oracle";
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("threw: ") + e.what();
  }
  report(12, ok, seconds_since(t0), -1.0, detail);
}

void criterion13() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int built = 0;
  std::string detail;
  try {
    const std::vector<std::string> kinds = {"i", "ii", "iii", "iv", "v", "vi"};
    for (int p : {3, 5}) {
      for (const std::string& kind : kinds) {
        const int rmin = (kind == "v" || kind == "vi") ? 2 : 1;
        for (int r = rmin; r <= 3; ++r) {
          std::vector<int> spacings = {1};
          if (kind == "iii" || kind == "iv") {
            spacings.clear();
            for (int s = 1; s <= 3; ++s)
              if (r % s == 0) spacings.push_back(s);
          }
          for (int s : spacings) {
            const FamilyPoly fp = family_polynomial(kind, r, s, p);
            ok = ok && check_symmetric_divisor(fp.f, fp.k);
            ok = ok && fp.f.degree() == 2 * r;
            ++built;
          }
        }
      }
    }
    detail = std::to_string(built) +
             " stock polynomials verified symmetric and periodic";
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("threw: ") + e.what();
  }
  report(13, ok, seconds_since(t0), 1.0, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  std::printf("acceptance: %d/13 criteria passed\n", 13 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
