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

#include "mpcodes/evaluation_plan.hpp"

#include <algorithm>

#include "mpcodes/error.hpp"

namespace mpcodes {

EvaluationPlan EvaluationPlan::ModM(Field field, const FieldElement& zeta, u64 m,
                                    std::vector<FieldElement> a) {
  if (!IsPrimitiveRootOfUnity(zeta, m)) {
    throw Error(ErrorCode::kNotPrimitiveRoot,
                zeta.ToString() + " is not a primitive " + std::to_string(m) + "-th root of unity");
  }
  EvaluationPlan plan;
  plan.field = std::move(field);
  plan.m = m;
  plan.mod_m = true;
  plan.zeta = zeta;
  plan.a = std::move(a);
  for (std::size_t p = 0; p < plan.a.size(); ++p) {
    FieldElement z = plan.field->One();
    for (u64 j = 0; j < m; ++j) {
      plan.worker_points.push_back(z * plan.a[p]);
      plan.hypernode_of.push_back(p);
      z *= zeta;
    }
  }
  return plan;
}

EvaluationPlan EvaluationPlan::Direct(Field field, std::vector<FieldElement> points) {
  EvaluationPlan plan;
  plan.zeta = field->One();
  plan.field = std::move(field);
  plan.a = points;
  plan.worker_points = std::move(points);
  return plan;
}

std::vector<std::size_t> EvaluationPlan::HypernodeWorkers(std::size_t p) const {
  std::vector<std::size_t> out;
  for (u64 j = 0; j < m; ++j) out.push_back(p * m + j);
  return out;
}

bool EvaluationPlan::PointsDistinct() const {
  std::vector<u128> idx;
  idx.reserve(worker_points.size());
  for (const FieldElement& x : worker_points) idx.push_back(field->IndexOf(x));
  std::sort(idx.begin(), idx.end());
  return std::adjacent_find(idx.begin(), idx.end()) == idx.end();
}

}  // namespace mpcodes
