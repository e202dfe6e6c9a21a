/*
 * Copyright 2026 The mpcodes Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mpcodes/serialization.hpp"

#include <sstream>

#include "json.hpp"
#include "mpcodes/error.hpp"

namespace mpcodes {

using json = nlohmann::ordered_json;

namespace {

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

template <class Fn>
auto Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed document: ") + e.what());
  }
}

json MatrixToJson(const BlockMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).ToString());
    rows.push_back(std::move(row));
  }
  return rows;
}

BlockMatrix MatrixFromJson(const json& rows, const Field& field, std::size_t r, std::size_t c) {
  BlockMatrix m(field, r, c);
  if (rows.size() != r) throw Error(ErrorCode::kParseError, "coefficient has the wrong row count");
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::kParseError, "coefficient has the wrong column count");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = ParseElement(field, rows[i][j].get<std::string>());
  }
  return m;
}

json ElementsToJson(const std::vector<FieldElement>& v) {
  json out = json::array();
  for (const FieldElement& x : v) out.push_back(x.ToString());
  return out;
}

json ReportBody(const ThresholdReport& rep) {
  json j;
  j["scheme"] = FormatSchemeSpec(rep.params);
  j["N"] = rep.n;
  if (rep.params.uses_mod_m()) j["P"] = rep.p;
  j["N_prime"] = rep.n_prime;
  if (rep.params.uses_mod_m()) j["P_prime"] = rep.p_prime;
  j["rate"] = rep.rate.ToString();
  j["rate_decimal"] = rep.rate.ToDouble();
  if (rep.delta) j["delta"] = *rep.delta;
  if (rep.l0) j["l0"] = *rep.l0;
  if (rep.t0) j["t0"] = *rep.t0;
  if (rep.u) j["U"] = *rep.u;
  if (rep.r0) j["r0"] = *rep.r0;
  if (rep.v) j["V"] = *rep.v;
  return j;
}

}  // namespace

std::string MatrixToText(const BlockMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.field()->Spec() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << m.at(i, j).ToString();
    }
    os << '\n';
  }
  return os.str();
}

BlockMatrix MatrixFromText(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::size_t rows = 0, cols = 0;
  std::string spec;
  if (!(is >> rows >> cols >> spec)) throw Error(ErrorCode::kParseError, "matrix header must be 'rows cols fieldspec'");
  const Field field = ParseFieldSpec(spec);
  BlockMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok)) {
        throw Error(ErrorCode::kParseError, "matrix ends after " + std::to_string(i * cols + j) + " entries");
      }
      m.at(i, j) = ParseElement(field, tok);
    }
  }
  std::string extra;
  if (is >> extra) throw Error(ErrorCode::kParseError, "trailing data after matrix entries");
  return m;
}

std::string MatPolyToJson(const MatPoly& p) {
  json j;
  j["field"] = p.field() ? p.field()->Spec() : "";
  j["rows"] = p.rows();
  j["cols"] = p.cols();
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = MatrixToJson(c);
  j["terms"] = std::move(terms);
  return j.dump(2);
}

MatPoly MatPolyFromJson(std::string_view text) {
  const json j = ParseJson(text);
  return Guard([&] {
    const Field field = ParseFieldSpec(j.at("field").get<std::string>());
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    MatPoly p(field, rows, cols);
    for (const auto& [key, value] : j.at("terms").items()) {
      std::size_t used = 0;
      const Exponent e = std::stoull(key, &used);
      if (used != key.size()) throw Error(ErrorCode::kParseError, "bad exponent '" + key + "'");
      p.SetTerm(e, MatrixFromJson(value, field, rows, cols));
    }
    return p;
  });
}

std::string PlanToJson(const EvaluationPlan& plan) {
  json j;
  j["field"] = plan.field->Spec();
  j["layout"] = plan.mod_m ? "mod-M" : "direct";
  j["M"] = plan.m;
  j["zeta"] = plan.zeta.ToString();
  j["a"] = ElementsToJson(plan.a);
  j["worker_points"] = ElementsToJson(plan.worker_points);
  j["seed"] = plan.seed;
  return j.dump(2);
}

EvaluationPlan PlanFromJson(std::string_view text) {
  // Accepts a bare plan or a find-eval document holding one under "plan".
  const json doc = ParseJson(text);
  const json& j = doc.is_object() && doc.contains("plan") ? doc.at("plan") : doc;
  return Guard([&] {
    const Field field = ParseFieldSpec(j.at("field").get<std::string>());
    std::vector<FieldElement> a;
    for (const auto& x : j.at("a")) a.push_back(ParseElement(field, x.get<std::string>()));
    const std::string layout = j.at("layout").get<std::string>();
    EvaluationPlan plan;
    if (layout == "mod-M") {
      plan = EvaluationPlan::ModM(field, ParseElement(field, j.at("zeta").get<std::string>()),
                                  j.at("M").get<u64>(), std::move(a));
    } else if (layout == "direct") {
      plan = EvaluationPlan::Direct(field, std::move(a));
    } else {
      throw Error(ErrorCode::kParseError, "unknown plan layout '" + layout + "'");
    }
    plan.seed = j.value("seed", u64{0});
    return plan;
  });
}

std::string ThresholdReportToJson(const ThresholdReport& rep) { return ReportBody(rep).dump(2); }

std::string SimReportToJson(const SimReport& rep) {
  json j;
  j["seed"] = rep.seed;
  j["scheme"] = rep.scheme;
  j["field"] = rep.field;
  j["plan"] = {{"workers", rep.num_workers}, {"hypernodes", rep.num_hypernodes}, {"zeta", rep.zeta}};
  j["straggler_set"] = rep.straggler_set;
  j["responses_used"] = rep.responses_used;
  j["decode_success"] = rep.decode_success;
  j["decode_path"] = rep.decode_path;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(rep.decoded_product_hash));
  j["decoded_product_hash"] = hash;
  j["mult_counts"] = {{"encode", rep.mult_counts.encode},
                      {"worker", rep.mult_counts.worker},
                      {"decode", rep.mult_counts.decode}};
  if (rep.wall_time_ms) j["wall_time_ms"] = *rep.wall_time_ms;
  return j.dump(2);
}

}  // namespace mpcodes
