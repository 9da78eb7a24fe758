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

// Flat-text and JSON serialization. Field order is fixed so identical runs
// produce identical bytes.

#pragma once

#include <string>

#include <json.hpp>

#include "asq/curve.hpp"
#include "asq/gf.hpp"
#include "asq/linpoly.hpp"
#include "asq/quadform.hpp"

namespace asq {

using json = nlohmann::ordered_json;

// Coefficient list as "enc@i,enc@j" with ascending indices; encodings are
// the canonical integer encodings of the ambient field.
std::string linpoly_to_string(const LinPoly& S);
LinPoly linpoly_parse(const FieldRef& ctx, const std::string& text);

json field_to_json(const FieldCtx& ctx);
json form_report_to_json(const FormReport& rep);
json curve_report_to_json(const CurveReport& rep);

// One sweep result row; params carries "key=value;..." pairs, never commas.
struct SweepRow {
  int p = 0, t = 0, n = 0;
  std::string family;
  std::string params;
  u64 g = 0;
  int w = 0;
  u64 N = 0;
  u64 lower = 0, upper = 0;
  std::string verdict;
  std::string expected;
  bool pass = false;
};

std::string csv_header();
std::string csv_row(const SweepRow& row);
json sweep_row_to_json(const SweepRow& row);

}  // namespace asq
