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

#ifndef MPCODES_EVALUATION_PLAN_HPP_
#define MPCODES_EVALUATION_PLAN_HPP_

#include <cstddef>
#include <vector>

#include "mpcodes/finite_field.hpp"

namespace mpcodes {

// Where the workers evaluate f and g.
//
// Mod-M plans (MP and custom codes): worker n = p*M + m evaluates at
// zeta^m * a_p and belongs to hypernode p. Direct plans (GGASP): worker n
// evaluates at a[n]; there are no hypernodes and zeta is 1.
struct EvaluationPlan {
  Field field;
  u64 m = 1;
  bool mod_m = false;
  FieldElement zeta;
  std::vector<FieldElement> a;
  std::vector<FieldElement> worker_points;
  std::vector<std::size_t> hypernode_of;
  u64 seed = 0;  // seed that produced the plan (0 for hand-built plans)

  // Errors: kNotPrimitiveRoot.
  static EvaluationPlan ModM(Field field, const FieldElement& zeta, u64 m,
                             std::vector<FieldElement> a);
  static EvaluationPlan Direct(Field field, std::vector<FieldElement> points);

  std::size_t num_workers() const { return worker_points.size(); }
  std::size_t num_hypernodes() const { return mod_m ? a.size() : 0; }
  // Workers of hypernode p, in order m = 0..M-1.
  std::vector<std::size_t> HypernodeWorkers(std::size_t p) const;
  bool PointsDistinct() const;
};

}  // namespace mpcodes

#endif  // MPCODES_EVALUATION_PLAN_HPP_
