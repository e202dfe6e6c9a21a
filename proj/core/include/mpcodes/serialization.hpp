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

#ifndef MPCODES_SERIALIZATION_HPP_
#define MPCODES_SERIALIZATION_HPP_

#include <string>
#include <string_view>

#include "mpcodes/block_matrix.hpp"
#include "mpcodes/evaluation_plan.hpp"
#include "mpcodes/matpoly.hpp"
#include "mpcodes/sdmm_protocol.hpp"
#include "mpcodes/thresholds.hpp"

namespace mpcodes {

// Matrix text format: a header line "rows cols fieldspec" followed by one
// line per row of space-separated entries, each entry its comma-separated
// coefficient tuple. Errors: kParseError.
std::string MatrixToText(const BlockMatrix& m);
BlockMatrix MatrixFromText(std::string_view text);

// {"field": spec, "rows": r, "cols": c, "terms": {"<exp>": [[entry, ...], ...]}}
std::string MatPolyToJson(const MatPoly& p);
MatPoly MatPolyFromJson(std::string_view json);

// {"field", "M", "layout": "mod-M"|"direct", "zeta", "a", "worker_points", "seed"}.
// PlanFromJson also accepts find-eval output, which nests the plan under "plan".
std::string PlanToJson(const EvaluationPlan& plan);
EvaluationPlan PlanFromJson(std::string_view json);

std::string ThresholdReportToJson(const ThresholdReport& rep);
std::string SimReportToJson(const SimReport& rep);

}  // namespace mpcodes

#endif  // MPCODES_SERIALIZATION_HPP_
