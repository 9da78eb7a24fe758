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

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asq/curve.hpp"
#include "asq/families.hpp"
#include "asq/gf.hpp"
#include "asq/quadform.hpp"
#include "asq/report.hpp"
#include "asq/upoly.hpp"

namespace {

using namespace asq;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << text;
}

std::string verdict_list(const std::vector<Verdict>& vs) {
  std::string out;
  for (Verdict v : vs) {
    if (!out.empty()) out += "|";
    out += verdict_name(v);
  }
  return out.empty() ? "-" : out;
}

bool verdict_allowed(const std::vector<Verdict>& expected, Verdict got) {
  for (Verdict v : expected)
    if (v == got) return true;
  return false;
}

struct Options {
  // field / curve
  int p = 0, t = 1, n = 0;
  std::string coeffs;
  // family
  std::string name;
  u64 q = 0;
  int m = 0, d = 0, k = 0;
  u64 seed = 1;
  std::string ftext;
  bool mirrored = false;
  bool predict = false;
  // sweep
  std::string family;
  int perturb = 0;
  u64 rng_seed = 1;
  bool negative_control = false;
  int rmax = 3, smax = 3;
  // common
  u64 max_enum = kDefaultEnumCeiling;
  int workers = 1;
  std::string out;
  std::string format = "csv";
};

int run_classify(const Options& o) {
  const FieldRef ctx = field_create(o.p, o.t, o.n, o.max_enum);
  const LinPoly S = linpoly_parse(ctx, o.coeffs);
  const Curve c = make_curve(S);
  const CurveReport rep =
      o.predict ? classify_predict(c) : classify(c, o.max_enum, o.workers);
  emit(curve_report_to_json(rep).dump(2) + "\n", o.out);
  return 0;
}

FamilyInstance build_family(const Options& o) {
  if (o.name == "cor1") return cor_family(1, o.q, o.m, o.seed, o.max_enum);
  if (o.name == "cor2") return cor_family(2, o.q, o.m, o.seed, o.max_enum);
  if (o.name == "cor3") return cor_family(3, o.q, o.m, o.seed, o.max_enum);
  if (o.name == "prop1") return prop1_family(o.q, o.m, o.seed, o.max_enum);
  if (o.name == "thm41") return thm41_curve(o.q, o.d, o.k, o.n, o.max_enum);
  if (o.name == "thm42")
    return thm42_curve(o.q, o.d, o.k, o.n, o.mirrored, o.max_enum);
  if (o.name == "thm51" || o.name == "thm52") {
    const auto [p, t] = factor_prime_power(o.q);
    (void)t;
    const FieldRef pf = field_create(p, 1, 1);
    const UPoly f = upoly_parse(pf, o.ftext);
    return o.name == "thm51" ? thm51_curve(o.q, f, o.k, o.n, o.max_enum)
                             : thm52_curve(o.q, f, o.k, o.n, o.max_enum);
  }
  throw std::invalid_argument("unknown family name '" + o.name + "'");
}

std::string check_instance(const FamilyInstance& inst, const CurveReport& rep) {
  std::string fails;
  if (!verdict_allowed(inst.expected, rep.verdict))
    fails += "verdict " + std::string(verdict_name(rep.verdict)) +
             " not in expected " + verdict_list(inst.expected) + "; ";
  if (inst.expected_w >= 0 && rep.w != inst.expected_w)
    fails += "w=" + std::to_string(rep.w) + " expected " +
             std::to_string(inst.expected_w) + "; ";
  if (inst.expected_genus > 0 && rep.g != inst.expected_genus)
    fails += "g=" + std::to_string(rep.g) + " expected " +
             std::to_string(inst.expected_genus) + "; ";
  return fails;
}

int run_family(const Options& o) {
  const FamilyInstance inst = build_family(o);
  const CurveReport rep = classify(inst.curve, o.max_enum, o.workers);
  const std::string fails = check_instance(inst, rep);

  json j;
  j["family"] = inst.name;
  j["params"] = inst.params;
  j["expected"] = verdict_list(inst.expected);
  if (inst.expected_w >= 0) j["expected_w"] = inst.expected_w;
  if (inst.expected_genus > 0) j["expected_g"] = inst.expected_genus;
  if (!inst.note.empty()) j["note"] = inst.note;
  j["report"] = curve_report_to_json(rep);
  j["pass"] = fails.empty();
  std::string text = j.dump(2) + "\n";
  if (fails.empty())
    text += "PASS (" + std::string(verdict_name(rep.verdict)) +
            ", N=" + std::to_string(rep.N) + ")\n";
  else
    text += "FAIL (" + fails + ")\n";
  emit(text, o.out);
  return fails.empty() ? 0 : 5;
}

// The seeded coefficient pattern as a dense vector over indices 0..m-1.
std::vector<Element> cor_pattern(const FieldRef& ctx, int variant, u64 q, int m,
                                 const Element& seed) {
  std::vector<Element> s(static_cast<size_t>(m), ctx->zero());
  if (variant <= 2) {
    s[0] = seed;
    for (int i = 2; i <= m - 1; i += 2) {
      u64 e = 1;
      for (int j = 0; j < i; ++j) e = checked_mul_u64(e, q, "seed exponent");
      s[static_cast<size_t>(i)] =
          ctx->from_int(2) * pow(seed, static_cast<i64>((e + 1) / 2));
    }
  } else {
    for (int i = 1; i <= m - 1; i += 2) {
      u64 e = 1;
      for (int j = 0; j < i; ++j) e = checked_mul_u64(e, q, "seed exponent");
      s[static_cast<size_t>(i)] = pow(seed, static_cast<i64>((e + 1) / (q + 1)));
    }
  }
  return s;
}

bool matches_cor_pattern(const FieldRef& ctx, int variant, u64 q, int m,
                         const std::vector<Element>& s) {
  const Element& seed = (variant <= 2) ? s[0] : s[1];
  if (seed.is_zero() || !is_in_subfield(seed, m)) return false;
  const std::vector<Element> want = cor_pattern(ctx, variant, q, m, seed);
  for (int i = 0; i < m; ++i)
    if (s[static_cast<size_t>(i)] != want[static_cast<size_t>(i)]) return false;
  return true;
}

SweepRow row_for(const FamilyInstance& inst, const CurveReport& rep,
                 const std::string& expected, bool pass) {
  SweepRow row;
  row.p = rep.p;
  row.t = rep.t;
  row.n = rep.n;
  row.family = inst.name;
  row.params = inst.params;
  row.g = rep.g;
  row.w = rep.w;
  row.N = rep.N;
  row.lower = rep.lower;
  row.upper = rep.upper;
  row.verdict = verdict_name(rep.verdict);
  row.expected = expected;
  row.pass = pass;
  return row;
}

int run_sweep_cor(const Options& o, std::vector<SweepRow>& rows) {
  const int variant = o.family == "cor1" ? 1 : (o.family == "cor2" ? 2 : 3);
  const auto [p, t] = factor_prime_power(o.q);
  const FieldRef ctx = field_create(p, t, 2 * o.m, o.max_enum);

  std::vector<u64> seeds = subfield_encs(ctx, o.m, o.max_enum);
  for (u64 enc : seeds) {
    if (enc == 0) continue;
    const FamilyInstance inst = cor_family(variant, o.q, o.m, enc, o.max_enum);
    const CurveReport rep = classify(inst.curve, o.max_enum, o.workers);
    const std::string fails = check_instance(inst, rep);
    rows.push_back(
        row_for(inst, rep, verdict_list(inst.expected), fails.empty()));
  }

  if (o.perturb > 0 || o.negative_control) {
    if (o.m < 3 && variant != 3)
      throw std::invalid_argument(
          "perturbation sweeps need m >= 3 (a lone coefficient cannot leave "
          "the pattern)");
    const Verdict family_verdict =
        variant == 1 ? Verdict::Maximal : Verdict::Minimal;
    std::vector<u64> nz;
    for (u64 enc : seeds)
      if (enc != 0) nz.push_back(enc);
    std::mt19937_64 rng(o.rng_seed);
    const int protected_low = (variant <= 2) ? 0 : 1;

    for (int trial = 0; trial < o.perturb;) {
      const Element seed = ctx->from_enc(nz[rng() % nz.size()]);
      std::vector<Element> s = cor_pattern(ctx, variant, o.q, o.m, seed);
      const int i = static_cast<int>(rng() % static_cast<u64>(o.m));
      const bool keep_nonzero = (i == protected_low || i == o.m - 1);
      Element val = ctx->zero();
      do {
        const u64 enc = keep_nonzero ? nz[rng() % nz.size()]
                                     : seeds[rng() % seeds.size()];
        val = ctx->from_enc(enc);
      } while (val == s[static_cast<size_t>(i)]);
      s[static_cast<size_t>(i)] = val;
      if (matches_cor_pattern(ctx, variant, o.q, o.m, s)) continue;

      FamilyInstance inst;
      inst.name = o.family + "-perturbed";
      inst.curve = make_curve(linpoly_from_elements(ctx, s));
      inst.params = "q=" + std::to_string(o.q) + ";m=" + std::to_string(o.m) +
                    ";i=" + std::to_string(i) +
                    ";S=" + linpoly_to_string(inst.curve.S);
      const CurveReport rep = classify(inst.curve, o.max_enum, o.workers);
      const bool off_verdict = rep.verdict != family_verdict;
      rows.push_back(row_for(inst, rep,
                             "not " + std::string(verdict_name(family_verdict)),
                             off_verdict));
      ++trial;
    }

    if (o.negative_control) {
      // Deliberately broken instance reported against the family's own
      // expectation: the row must FAIL, proving the sweep catches drift.
      const Element seed = ctx->from_enc(nz[0]);
      std::vector<Element> s = cor_pattern(ctx, variant, o.q, o.m, seed);
      const int i = (variant == 3) ? 0 : 1;
      s[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] + ctx->one();
      FamilyInstance inst;
      inst.name = o.family + "-control";
      inst.curve = make_curve(linpoly_from_elements(ctx, s));
      inst.params = "q=" + std::to_string(o.q) + ";m=" + std::to_string(o.m) +
                    ";S=" + linpoly_to_string(inst.curve.S);
      const CurveReport rep = classify(inst.curve, o.max_enum, o.workers);
      rows.push_back(row_for(inst, rep, verdict_name(family_verdict),
                             rep.verdict == family_verdict));
    }
  }
  return 0;
}

void run_sweep_prop53(const Options& o, std::vector<SweepRow>& rows) {
  if (o.p == 0) throw std::invalid_argument("prop53 sweeps need --p");
  const std::vector<std::string> kinds = {"i", "ii", "iii", "iv", "v", "vi"};
  for (const std::string& kind : kinds)
    for (int r = 1; r <= o.rmax; ++r) {
      if ((kind == "v" || kind == "vi") && r < 2) continue;
      const bool uses_s = (kind == "iii" || kind == "iv");
      std::vector<int> svals;
      if (uses_s) {
        for (int s = 1; s <= o.smax; ++s)
          if (r % s == 0) svals.push_back(s);
      } else {
        svals.push_back(1);  // s is fixed or unused for these kinds
      }
      for (int s : svals) {
        SweepRow row;
        row.p = o.p;
        row.t = 1;
        row.n = 1;
        row.family = "prop53-" + kind;
        bool ok = false;
        int k = 0;
        const std::string sp = uses_s ? ";s=" + std::to_string(s) : "";
        try {
          const FamilyPoly fp = family_polynomial(kind, r, s, o.p);
          k = fp.k;
          ok = check_symmetric_divisor(fp.f, fp.k);
          row.params = "r=" + std::to_string(r) + sp +
                       ";k=" + std::to_string(k) +
                       ";f=" + upoly_to_string(fp.f);
        } catch (const std::exception& e) {
          row.params = "r=" + std::to_string(r) + sp + ";error=" + e.what();
        }
        row.verdict = ok ? "SymmetricDivisor" : "NotDivisor";
        row.expected = "SymmetricDivisor";
        row.pass = ok;
        rows.push_back(row);
      }
    }
}

int run_sweep(const Options& o) {
  std::vector<SweepRow> rows;
  if (o.family == "cor1" || o.family == "cor2" || o.family == "cor3")
    run_sweep_cor(o, rows);
  else if (o.family == "prop53")
    run_sweep_prop53(o, rows);
  else
    throw std::invalid_argument("unknown sweep family '" + o.family + "'");

  int failures = 0;
  for (const SweepRow& row : rows)
    if (!row.pass) ++failures;

  std::string text;
  if (o.format == "csv") {
    text += csv_header() + "\n";
    for (const SweepRow& row : rows) text += csv_row(row) + "\n";
    text += "# rows=" + std::to_string(rows.size()) +
            " pass=" + std::to_string(rows.size() - failures) +
            " fail=" + std::to_string(failures) + "\n";
  } else if (o.format == "json") {
    json j;
    j["rows"] = json::array();
    for (const SweepRow& row : rows) j["rows"].push_back(sweep_row_to_json(row));
    j["summary"] = {{"rows", rows.size()},
                    {"pass", rows.size() - failures},
                    {"fail", failures}};
    text = j.dump(2) + "\n";
  } else {
    throw std::invalid_argument("unknown format '" + o.format + "'");
  }
  emit(text, o.out);
  return failures == 0 ? 0 : 5;
}

int run_oracle(const Options& o) {
  const FieldRef ctx = field_create(o.p, o.t, o.n, o.max_enum);
  const LinPoly S = linpoly_parse(ctx, o.coeffs);
  const Curve c = make_curve(S);
  const u64 counted = point_count(c, o.max_enum, o.workers);
  const u64 direct = direct_count_oracle(c, o.max_enum);
  json j;
  j["p"] = o.p;
  j["t"] = o.t;
  j["n"] = o.n;
  j["S"] = linpoly_to_string(S);
  j["point_count"] = counted;
  j["direct_count"] = direct;
  j["match"] = counted == direct;
  emit(j.dump(2) + "\n", o.out);
  return counted == direct ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Artin-Schreier curves from linearized polynomials: "
               "classification, named families, verification sweeps"};
  app.require_subcommand(1);

  CLI::App* c_classify =
      app.add_subcommand("classify", "classify one curve from coefficients");
  c_classify->add_option("--p", o.p, "field characteristic")->required();
  c_classify->add_option("--t", o.t, "base field degree over the prime field");
  c_classify->add_option("--n", o.n, "extension degree over the base field")
      ->required();
  c_classify->add_option("--coeffs", o.coeffs, "coefficients enc@i,enc@j,...")
      ->required();
  c_classify->add_flag("--predict", o.predict,
                       "radical-only prediction, no enumeration");

  CLI::App* c_family = app.add_subcommand(
      "family", "build a named construction and verify its promise");
  c_family->add_option("--name", o.name,
                       "cor1|cor2|cor3|prop1|thm41|thm42|thm51|thm52")
      ->required();
  c_family->add_option("--q", o.q, "base field size (odd prime power)");
  c_family->add_option("--m", o.m, "half the ambient extension degree");
  c_family->add_option("--d", o.d, "cyclotomic index");
  c_family->add_option("--k", o.k, "shift period");
  c_family->add_option("--n", o.n, "ambient extension degree");
  c_family->add_option("--seed", o.seed, "seed coefficient encoding");
  c_family->add_option("--f", o.ftext, "symmetric divisor of x^k-1, e.g. x^2+x+1");
  c_family->add_flag("--mirrored-c", o.mirrored,
                     "mirrored half-pattern coefficient reading");

  CLI::App* c_sweep =
      app.add_subcommand("sweep", "verify a family across a parameter grid");
  c_sweep->add_option("--family", o.family, "cor1|cor2|cor3|prop53")->required();
  c_sweep->add_option("--q", o.q, "base field size (seeded families)");
  c_sweep->add_option("--m", o.m, "half the ambient extension degree");
  c_sweep->add_option("--p", o.p, "characteristic (prop53)");
  c_sweep->add_option("--perturb", o.perturb,
                      "extra off-pattern rows expected non-extremal");
  c_sweep->add_option("--rng-seed", o.rng_seed, "perturbation draw seed");
  c_sweep->add_flag("--negative-control", o.negative_control,
                    "append one broken row that must FAIL");
  c_sweep->add_option("--rmax", o.rmax, "largest r (prop53)");
  c_sweep->add_option("--smax", o.smax, "largest s (prop53)");

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "cross-check the point count by direct pair enumeration");
  c_oracle->add_option("--p", o.p, "field characteristic")->required();
  c_oracle->add_option("--t", o.t, "base field degree over the prime field");
  c_oracle->add_option("--n", o.n, "extension degree over the base field")
      ->required();
  c_oracle->add_option("--coeffs", o.coeffs, "coefficients enc@i,enc@j,...")
      ->required();

  for (CLI::App* sub : {c_classify, c_family, c_sweep, c_oracle}) {
    sub->add_option("--max-enum", o.max_enum, "enumeration ceiling");
    sub->add_option("--workers", o.workers, "worker threads for counting");
    sub->add_option("--out", o.out, "write output to a file instead of stdout");
    sub->add_option("--format", o.format, "csv|json (sweep only)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_classify->parsed()) return run_classify(o);
    if (c_family->parsed()) return run_family(o);
    if (c_sweep->parsed()) return run_sweep(o);
    if (c_oracle->parsed()) return run_oracle(o);
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 4;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
