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

#ifndef MPCODES_SDMM_PROTOCOL_HPP_
#define MPCODES_SDMM_PROTOCOL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpcodes/code_schemes.hpp"
#include "mpcodes/evaluation_plan.hpp"
#include "mpcodes/linalg_checks.hpp"
#include "mpcodes/thresholds.hpp"

namespace mpcodes {

// Which workers fail to respond.
struct StragglerSpec {
  enum class Mode { kExplicit, kRandom, kProbability };
  Mode mode = Mode::kExplicit;
  std::vector<std::size_t> workers;  // kExplicit
  std::size_t count = 0;             // kRandom: uniform subset of this size
  double probability = 0.0;          // kProbability: independent per worker

  // "none", "3,7,11", "random:S" or "prob:f". Errors: kParseError.
  static StragglerSpec Parse(std::string_view text);
  std::string ToString() const;
  // Sorted straggler indices. Errors: kOutOfRange.
  std::vector<std::size_t> Resolve(std::size_t num_workers, Rng& rng) const;
};

// Worker index -> h(point of that worker).
using Responses = std::map<std::size_t, BlockMatrix>;

struct DecodeOptions {
  // After the hypernode and full-interpolation stages, try to express each
  // product block directly as a linear combination of the responses.
  bool partial = true;
};

struct DecodeResult {
  std::vector<BlockMatrix> blocks;  // index k*L + l
  std::string path;                 // "hypernode", "full", "partial"
  std::size_t responses_used = 0;
};

// Mod-M decoder: (a) with enough complete hypernodes, hhat(a_p) =
// (1/M) sum_m zeta^m h(zeta^m a_p) and interpolate hhat on supp(hhat);
// (b) otherwise interpolate h on supp(h) from the survivors, rebuild the
// missing responses and run (a); (c) optionally solve for the product
// blocks alone. Errors: kInsufficientResponses, kInconsistentResponses.
DecodeResult DecodeMp(const Responses& responses, const EvaluationPlan& plan,
                      const SchemeParams& params, const SupportSets& supports,
                      MulCounter* counter = nullptr, const DecodeOptions& options = {});

// Full interpolation of h on supp(h). Errors: kInsufficientResponses,
// kInconsistentResponses.
DecodeResult DecodeGgasp(const Responses& responses, const EvaluationPlan& plan,
                         const SchemeParams& params, std::span<const Exponent> supp_h,
                         MulCounter* counter = nullptr);

// Structural test, independent of the data: could these survivors decode?
bool SurvivorsDecode(const EvaluationPlan& plan, const SchemeParams& params,
                     const SupportSets& supports, std::span<const std::size_t> survivors,
                     const DecodeOptions& options = {});

struct MultCounts {
  u64 encode = 0;  // evaluating f and g at every worker point
  u64 worker = 0;  // f(x) * g(x) products
  u64 decode = 0;
};

struct SimOptions {
  bool verify_plan = true;  // PlanDecodable and SecurityCheck before encoding
  bool timing = false;      // record wall time (makes reports non-reproducible)
  DecodeOptions decode;
};

struct SimReport {
  u64 seed = 0;
  std::string scheme;
  std::string field;
  std::size_t num_workers = 0;
  std::size_t num_hypernodes = 0;
  std::string zeta;
  std::vector<std::size_t> straggler_set;
  std::size_t responses_used = 0;
  bool decode_success = false;
  std::string decode_path;
  std::string failure;
  u64 decoded_product_hash = 0;
  MultCounts mult_counts;
  std::optional<double> wall_time_ms;
};

// Encodes, evaluates the surviving workers, decodes and verifies the
// product against direct multiplication. Decoding failures are reported,
// not thrown. Masks are drawn from Rng(seed). Errors: kPlanInvalid.
SimReport RunProtocol(const PartitionedInput& input, const SchemeParams& params,
                      const EvaluationPlan& plan, const std::vector<std::size_t>& stragglers,
                      u64 seed, const SimOptions& options = {});

// FNV-1a over the textual form of the blocks.
u64 HashBlocks(const std::vector<BlockMatrix>& blocks);

// C(P, KL) C(N - KML, S) / C(N, S), N = MP, exact; 1 when
// S <= N - (KML + M - 1). Errors: kOutOfRange when S > N - KML.
Rational POfSLowerBound(u64 k, u64 m, u64 l, u64 p, u64 s);

struct POfSEstimate {
  u64 successes = 0;
  u64 trials = 0;
  bool exhaustive = false;
  Rational fraction() const { return trials == 0 ? Rational(0, 1) : Rational(successes, trials); }
};

// Fraction of straggler sets of size s after which decoding succeeds. Every
// set is tried when exhaustive (requires C(N, s) <= 10^6), otherwise
// `trials` uniform sets. Each attempt decodes a fixed random scalar
// instance and checks the result. Errors: kBudgetExceeded.
POfSEstimate POfSEmpirical(const SchemeParams& params, const EvaluationPlan& plan, u64 s,
                           bool exhaustive, u64 trials, u64 seed,
                           const DecodeOptions& options = {});

struct WitnessSearchOptions {
  bool enabled = true;
  bool exhaustive = false;  // all C(N, N') minors; otherwise `samples` random ones
  u64 samples = 10'000;
  u64 seed = 1;
  u64 budget = kDefaultMdsBudget;
  // Also find the smallest s such that every s-subset of workers decodes
  // (SurvivorsDecode). Gives up once a size needs more than `budget`
  // subsets to be enumerated.
  bool exact = false;
};

struct RecoveryThresholdReport {
  u64 n = 0;        // workers in the plan
  u64 n_prime = 0;  // |supp(h)|
  u64 p = 0;        // hypernodes in the plan
  u64 p_prime = 0;  // |supp(hhat)|
  u64 bound = 0;    // N - (P - P'), always valid
  bool gapless = false;
  // Result of the MDS search on GV(worker points, supp(h)).
  bool searched = false;
  bool search_exhaustive = false;
  u64 minors_checked = 0;
  bool full_code_mds = false;
  std::vector<std::size_t> witness;  // surviving workers of a singular minor
  u64 threshold = 0;                 // best supported value
  std::string evidence;
  std::optional<u64> exact_threshold;  // from the exhaustive survivor search
  std::vector<std::size_t> exact_failure;  // a non-decoding set of size exact - 1
};

RecoveryThresholdReport MpRecoveryThresholdWithSecurity(const SchemeParams& params,
                                                        const EvaluationPlan& plan,
                                                        const WitnessSearchOptions& options = {});

}  // namespace mpcodes

#endif  // MPCODES_SDMM_PROTOCOL_HPP_
