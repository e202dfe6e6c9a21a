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

#ifndef MPCODES_LINALG_CHECKS_HPP_
#define MPCODES_LINALG_CHECKS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpcodes/block_matrix.hpp"
#include "mpcodes/code_schemes.hpp"
#include "mpcodes/evaluation_plan.hpp"

namespace mpcodes {

inline constexpr u64 kDefaultMdsBudget = 10'000'000;

// GV(points, exponents): |exponents| x |points|, entry (p, n) =
// points[n]^exponents[p].
BlockMatrix GeneralizedVandermonde(const Field& field, std::span<const FieldElement> points,
                                   std::span<const Exponent> exponents);

struct MdsOptions {
  u64 budget = kDefaultMdsBudget;  // max minors for the exhaustive check
  // When set, draw `samples` random minors instead of enumerating them.
  // The result is then labelled non-exhaustive.
  bool spot_check = false;
  u64 samples = 10'000;
  u64 seed = 1;
};

struct MdsResult {
  bool mds = true;
  bool exhaustive = true;
  u64 minors_checked = 0;
  std::vector<std::size_t> witness;  // columns of a singular minor
};

// Every P x P minor of a P x N matrix invertible. Exhaustive unless
// options.spot_check. Errors: kBudgetExceeded when C(N, P) > budget in
// exhaustive mode; kShapeMismatch when P > N.
MdsResult CheckMds(const BlockMatrix& matrix, const MdsOptions& options = {});
bool IsMds(const BlockMatrix& matrix, u64 budget = kDefaultMdsBudget);

// Decodability of the plan for the given coefficient support: the hypernode
// bases a (mod-M plans) or the worker points (direct plans) must make
// GV(points, support) invertible. With more points than exponents, every
// maximal minor is checked (robust mode).
bool DecodabilityCheck(const EvaluationPlan& plan, std::span<const Exponent> support,
                       u64 budget = kDefaultMdsBudget);

// GV(points, support) has full column rank with every point of the plan
// available: the no-straggler decodability that the protocol requires.
bool PlanDecodable(const EvaluationPlan& plan, std::span<const Exponent> support);

struct SecurityMatrices {
  BlockMatrix sigma_a;  // T x N, column n = (x_n^{alpha_t})_t
  BlockMatrix sigma_b;  // T x N, column n = (x_n^{beta_t})_t
};

// Errors: kZeroEvaluationPoint.
SecurityMatrices BuildSecurityMatrices(const EvaluationPlan& plan, const SchemeParams& params);

struct SecurityResult {
  bool secure = true;
  MdsResult sigma_a;
  MdsResult sigma_b;
};

// T-security: Sigma_A and Sigma_B both MDS. Trivially true for T = 0.
// Errors: kZeroEvaluationPoint, kBudgetExceeded.
SecurityResult SecurityCheckDetailed(const EvaluationPlan& plan, const SchemeParams& params,
                                     const MdsOptions& options = {});
bool SecurityCheck(const EvaluationPlan& plan, const SchemeParams& params,
                   u64 budget = kDefaultMdsBudget);

// Necessary conditions for decodability of a square mod-M plan with M > 1
// and P > 1: a_p != 0 and the a_p^M pairwise distinct.
bool NecessaryConditionsHold(const EvaluationPlan& plan);

struct EvalSearchOptions {
  u64 seed = 1;
  u64 budget = 64;        // candidates at the base degree; doubled per escalation
  int max_degree = 6;     // highest extension degree tried
  bool escalate = true;   // try GF(p^{r+1}), ... after the base field
  bool subgroup = false;  // draw a_p from the subgroup of order coprime to M
  // Hypernodes (mod-M codes) or workers (GGASP); 0 = the recovery threshold.
  std::size_t points = 0;
  u64 mds_budget = kDefaultMdsBudget;
};

struct EvalSearchDiagnostics {
  struct Degree {
    int degree = 0;
    std::string field;
    std::string skipped;  // reason this degree was not sampled, if any
    u64 candidates = 0;
    u64 zero_point = 0;
    u64 repeated_power = 0;  // a_p^M collide, or repeated points
    u64 not_decodable = 0;
    u64 not_secure = 0;
  };
  std::vector<Degree> degrees;
  std::string MostFrequentFailure() const;
  std::string Summary() const;
};

struct EvalSearchResult {
  EvaluationPlan plan;
  std::vector<Exponent> decode_support;  // supp(hhat) or supp(h)
  EvalSearchDiagnostics diagnostics;
};

// Samples evaluation vectors until one passes the decodability and
// security checks, escalating the extension degree when the budget runs
// out. Skips fields without a primitive M-th root and fields smaller than
// MP + 1 (N + 1 for GGASP). Deterministic given the seed.
// Errors: kBudgetExhausted (with diagnostics), kBadParams.
EvalSearchResult FindEvaluationVector(const SchemeParams& params, const Field& base,
                                      const EvalSearchOptions& options = {});

// The base field spec p or p^r extended to degree r.
Field ExtendedField(const Field& base, int degree);

}  // namespace mpcodes

#endif  // MPCODES_LINALG_CHECKS_HPP_
