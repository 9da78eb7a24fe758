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

#include "asq/report.hpp"

#include <cstdlib>
#include <stdexcept>

namespace asq {

std::string linpoly_to_string(const LinPoly& S) {
  const auto terms = linpoly_terms(S);
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [i, enc] : terms) {
    if (!out.empty()) out += ",";
    out += std::to_string(enc) + "@" + std::to_string(i);
  }
  return out;
}

namespace {

u64 parse_u64(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected an unsigned integer, got '" + text + "'");
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (errno != 0 || end != text.c_str() + text.size())
    throw std::invalid_argument("integer out of range: '" + text + "'");
  return v;
}

}  // namespace

LinPoly linpoly_parse(const FieldRef& ctx, const std::string& text) {
  std::string stripped;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') stripped += ch;
  if (stripped.empty())
    throw std::invalid_argument("empty coefficient list");
  if (stripped == "0") return linpoly_zero(ctx);

  std::vector<std::pair<int, Element>> terms;
  size_t pos = 0;
  while (pos <= stripped.size()) {
    const size_t comma = stripped.find(',', pos);
    const std::string term =
        stripped.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const size_t at = term.find('@');
    if (at == std::string::npos)
      throw std::invalid_argument("coefficient term '" + term +
                                  "' is not of the form enc@index");
    const u64 enc = parse_u64(term.substr(0, at));
    const u64 idx = parse_u64(term.substr(at + 1));
    if (enc >= ctx->size())
      throw std::invalid_argument("encoding " + std::to_string(enc) +
                                  " is outside the field");
    if (idx > 4096)
      throw std::invalid_argument("coefficient index " + std::to_string(idx) +
                                  " is unreasonably large");
    terms.emplace_back(static_cast<int>(idx), ctx->from_enc(enc));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return linpoly_from_terms(ctx, terms);
}

json field_to_json(const FieldCtx& ctx) {
  json j;
  j["p"] = ctx.p();
  j["t"] = ctx.t();
  j["n"] = ctx.n();
  j["modulus"] = ctx.modulus();
  return j;
}

namespace {

json terms_to_string_json(const std::vector<std::pair<int, u64>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [i, enc] : terms) {
    if (!out.empty()) out += ",";
    out += std::to_string(enc) + "@" + std::to_string(i);
  }
  return out;
}

}  // namespace

json form_report_to_json(const FormReport& rep) {
  json j;
  j["p"] = rep.p;
  j["t"] = rep.t;
  j["n"] = rep.n;
  j["S"] = terms_to_string_json(rep.S);
  j["w"] = rep.w;
  j["nq"] = rep.nq;
  j["sign"] = std::string(1, rep.sign);
  j["methods"] = rep.methods;
  return j;
}

json curve_report_to_json(const CurveReport& rep) {
  json j;
  j["p"] = rep.p;
  j["t"] = rep.t;
  j["n"] = rep.n;
  j["S"] = terms_to_string_json(rep.S);
  j["g"] = rep.g;
  j["w"] = rep.w;
  j["N"] = rep.N;
  j["lower"] = rep.lower;
  j["upper"] = rep.upper;
  j["verdict"] = verdict_name(rep.verdict);
  j["nq"] = rep.nq;
  if (!rep.candidates.empty()) j["candidates"] = rep.candidates;
  return j;
}

std::string csv_header() {
  return "p,t,n,family,params,g,w,N,lower,upper,verdict,expected,pass";
}

std::string csv_row(const SweepRow& row) {
  std::string out;
  out += std::to_string(row.p) + "," + std::to_string(row.t) + "," +
         std::to_string(row.n) + ",";
  out += row.family + "," + row.params + ",";
  out += std::to_string(row.g) + "," + std::to_string(row.w) + "," +
         std::to_string(row.N) + ",";
  out += std::to_string(row.lower) + "," + std::to_string(row.upper) + ",";
  out += row.verdict + "," + row.expected + ",";
  out += row.pass ? "PASS" : "FAIL";
  return out;
}

json sweep_row_to_json(const SweepRow& row) {
  json j;
  j["p"] = row.p;
  j["t"] = row.t;
  j["n"] = row.n;
  j["family"] = row.family;
  j["params"] = row.params;
  j["g"] = row.g;
  j["w"] = row.w;
  j["N"] = row.N;
  j["lower"] = row.lower;
  j["upper"] = row.upper;
  j["verdict"] = row.verdict;
  j["expected"] = row.expected;
  j["pass"] = row.pass;
  return j;
}

}  // namespace asq
