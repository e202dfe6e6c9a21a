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

#include "mpcodes/sdmm_protocol.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <set>

#include "mpcodes/error.hpp"
#include "mpcodes/linalg.hpp"

namespace mpcodes {

// ---------------------------------------------------------------------------
// Stragglers

StragglerSpec StragglerSpec::Parse(std::string_view text) {
  StragglerSpec spec;
  auto number = [&](std::string_view v) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      throw Error(ErrorCode::kParseError, "bad straggler spec '" + std::string(text) + "'");
    }
    return out;
  };
  if (text.empty() || text == "none") return spec;
  if (text.starts_with("random:")) {
    spec.mode = Mode::kRandom;
    spec.count = number(text.substr(7));
    return spec;
  }
  if (text.starts_with("prob:")) {
    spec.mode = Mode::kProbability;
    const std::string v(text.substr(5));
    char* end = nullptr;
    spec.probability = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || spec.probability < 0 || spec.probability > 1) {
      throw Error(ErrorCode::kParseError, "straggler probability must be in [0, 1]: '" + v + "'");
    }
    return spec;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    spec.workers.push_back(number(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(spec.workers.begin(), spec.workers.end());
  spec.workers.erase(std::unique(spec.workers.begin(), spec.workers.end()), spec.workers.end());
  return spec;
}

std::string StragglerSpec::ToString() const {
  switch (mode) {
    case Mode::kRandom:
      return "random:" + std::to_string(count);
    case Mode::kProbability: {
      std::string s = std::to_string(probability);
      return "prob:" + s;
    }
    case Mode::kExplicit:
      break;
  }
  if (workers.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < workers.size(); ++i) {
    if (i > 0) s.push_back(',');
    s += std::to_string(workers[i]);
  }
  return s;
}

std::vector<std::size_t> StragglerSpec::Resolve(std::size_t num_workers, Rng& rng) const {
  switch (mode) {
    case Mode::kExplicit:
      for (std::size_t w : workers) {
        if (w >= num_workers) {
          throw Error(ErrorCode::kOutOfRange, "straggler " + std::to_string(w) + " but only " +
                                                  std::to_string(num_workers) + " workers");
        }
      }
      return workers;
    case Mode::kRandom:
      if (count > num_workers) {
        throw Error(ErrorCode::kOutOfRange, std::to_string(count) + " stragglers among " +
                                                std::to_string(num_workers) + " workers");
      }
      return RandomSubset(num_workers, count, rng);
    case Mode::kProbability: {
      std::vector<std::size_t> out;
      // 53-bit uniform in [0, 1).
      for (std::size_t w = 0; w < num_workers; ++w) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < probability) out.push_back(w);
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Decoding

namespace {

BlockMatrix StackRows(const Field& field, const std::vector<const BlockMatrix*>& values) {
  const std::size_t width = values.empty() ? 0 : values.front()->rows() * values.front()->cols();
  BlockMatrix out(field, values.size(), width);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto src = values[i]->entries();
    for (std::size_t j = 0; j < width; ++j) out.at(i, j) = src[j];
  }
  return out;
}

BlockMatrix RowAsBlock(const BlockMatrix& m, std::size_t row, std::size_t rows, std::size_t cols) {
  BlockMatrix out(m.field(), rows, cols);
  auto dst = out.entries();
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = m.at(row, j);
  return out;
}

std::size_t IndexIn(std::span<const Exponent> support, Exponent e) {
  const auto it = std::lower_bound(support.begin(), support.end(), e);
  if (it == support.end() || *it != e) {
    throw Error(ErrorCode::kPlanInvalid, "product block exponent " + std::to_string(e) +
                                             " is outside the decoded support");
  }
  return static_cast<std::size_t>(it - support.begin());
}

// Product blocks read from coefficient rows of a solution over `support`.
std::vector<BlockMatrix> ReadBlocks(const SchemeParams& params, std::span<const Exponent> support,
                                    const BlockMatrix& coeffs, std::size_t rows, std::size_t cols) {
  std::vector<BlockMatrix> blocks(params.k * params.l);
  for (const auto& [kl, e] : ProductBlockPositions(params)) {
    blocks[kl.first * params.l + kl.second] = RowAsBlock(coeffs, IndexIn(support, e), rows, cols);
  }
  return blocks;
}

std::vector<std::size_t> CompleteHypernodes(const EvaluationPlan& plan,
                                            const std::set<std::size_t>& alive) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < plan.num_hypernodes(); ++p) {
    bool complete = true;
    for (std::size_t w : plan.HypernodeWorkers(p)) complete = complete && alive.count(w) != 0;
    if (complete) out.push_back(p);
  }
  return out;
}

std::vector<FieldElement> PointsOf(const EvaluationPlan& plan, std::span<const std::size_t> workers) {
  std::vector<FieldElement> out;
  out.reserve(workers.size());
  for (std::size_t w : workers) out.push_back(plan.worker_points[w]);
  return out;
}

// Columns of the identity selecting the product-block exponents of supp(h).
BlockMatrix TargetSelector(const Field& field, const SchemeParams& params,
                           std::span<const Exponent> supp_h) {
  const auto positions = ProductBlockPositions(params);
  BlockMatrix e(field, supp_h.size(), positions.size());
  std::size_t col = 0;
  for (const auto& [kl, exp] : positions) {
    (void)kl;
    e.at(IndexIn(supp_h, exp), col++) = field->One();
  }
  return e;
}

void CheckResponses(const Responses& responses, const EvaluationPlan& plan) {
  for (const auto& [w, v] : responses) {
    (void)v;
    if (w >= plan.num_workers()) {
      throw Error(ErrorCode::kOutOfRange, "response from unknown worker " + std::to_string(w));
    }
  }
}

}  // namespace

DecodeResult DecodeMp(const Responses& responses, const EvaluationPlan& plan,
                      const SchemeParams& params, const SupportSets& supports,
                      MulCounter* counter, const DecodeOptions& options) {
  if (!plan.mod_m) throw Error(ErrorCode::kPlanInvalid, "mod-M decoder needs a hypernode plan");
  CheckResponses(responses, plan);
  if (responses.empty()) throw Error(ErrorCode::kInsufficientResponses, "no responses");
  const Field& field = plan.field;
  const std::size_t rows = responses.begin()->second.rows();
  const std::size_t cols = responses.begin()->second.cols();
  const std::span<const Exponent> supp_hhat = supports.supp_hhat;
  const std::span<const Exponent> supp_h = supports.supp_h;

  std::set<std::size_t> alive;
  for (const auto& entry : responses) alive.insert(entry.first);

  // (a) Partial interpolation of hhat from complete hypernodes.
  const auto hypernode_path = [&](const Responses& resp) -> std::optional<DecodeResult> {
    std::set<std::size_t> have;
    for (const auto& entry : resp) have.insert(entry.first);
    const std::vector<std::size_t> complete = CompleteHypernodes(plan, have);
    if (complete.size() < supp_hhat.size()) return std::nullopt;
    const FieldElement inv_m =
        field->FromInt(static_cast<std::int64_t>(plan.m % field->characteristic())).inv();
    std::vector<BlockMatrix> hhat_values;
    std::vector<FieldElement> bases;
    for (std::size_t p : complete) {
      BlockMatrix acc(field, rows, cols);
      FieldElement z = field->One();
      for (std::size_t w : plan.HypernodeWorkers(p)) {
        AddScaled(acc, z, resp.at(w), counter);
        z *= plan.zeta;
      }
      hhat_values.push_back(Scale(inv_m, acc, counter));
      bases.push_back(plan.a[p]);
    }
    std::vector<const BlockMatrix*> ptrs;
    for (const BlockMatrix& v : hhat_values) ptrs.push_back(&v);
    const LinearSolution sol =
        SolveLinear(EvaluationMatrix(field, bases, supp_hhat), StackRows(field, ptrs), counter);
    if (!sol.unique()) return std::nullopt;
    if (!sol.all_consistent()) {
      throw Error(ErrorCode::kInconsistentResponses, "hypernode evaluations contradict supp(hhat)");
    }
    return DecodeResult{ReadBlocks(params, supp_hhat, sol.x, rows, cols), "hypernode",
                        complete.size() * plan.m};
  };

  if (auto r = hypernode_path(responses)) return *r;

  const std::vector<std::size_t> survivors(alive.begin(), alive.end());
  const std::vector<FieldElement> points = PointsOf(plan, survivors);
  std::vector<const BlockMatrix*> ptrs;
  for (std::size_t w : survivors) ptrs.push_back(&responses.at(w));
  const BlockMatrix values = StackRows(field, ptrs);
  const BlockMatrix vander = EvaluationMatrix(field, points, supp_h);

  // (b) Erasure-decode h, rebuild every response, then run (a).
  if (survivors.size() >= supp_h.size()) {
    const LinearSolution sol = SolveLinear(vander, values, counter);
    if (sol.unique()) {
      if (!sol.all_consistent()) {
        throw Error(ErrorCode::kInconsistentResponses, "responses contradict supp(h)");
      }
      MatPoly h(field, rows, cols);
      for (std::size_t j = 0; j < supp_h.size(); ++j) h.SetTerm(supp_h[j], RowAsBlock(sol.x, j, rows, cols));
      Responses full = responses;
      for (std::size_t w = 0; w < plan.num_workers(); ++w) {
        if (full.count(w) == 0) full.emplace(w, EvalSparseHorner(h, plan.worker_points[w], counter));
      }
      if (auto r = hypernode_path(full)) {
        r->path = "full";
        r->responses_used = survivors.size();
        return *r;
      }
    }
  }

  // (c) Each product block as a fixed combination of the responses: the
  // target coefficient rows must lie in the row space of the survivor
  // evaluation matrix.
  if (options.partial) {
    const LinearSolution comb =
        SolveLinear(vander.Transposed(), TargetSelector(field, params, supp_h), counter);
    if (comb.all_consistent()) {
      std::vector<BlockMatrix> blocks(params.k * params.l);
      std::size_t col = 0;
      for (const auto& [kl, exp] : ProductBlockPositions(params)) {
        (void)exp;
        BlockMatrix acc(field, rows, cols);
        for (std::size_t i = 0; i < survivors.size(); ++i) {
          if (!comb.x.at(i, col).is_zero()) AddScaled(acc, comb.x.at(i, col), *ptrs[i], counter);
        }
        blocks[kl.first * params.l + kl.second] = std::move(acc);
        ++col;
      }
      return DecodeResult{std::move(blocks), "partial", survivors.size()};
    }
  }

  const std::vector<std::size_t> complete = CompleteHypernodes(plan, alive);
  throw Error(ErrorCode::kInsufficientResponses,
              std::to_string(complete.size()) + " complete hypernodes (need " +
                  std::to_string(supp_hhat.size()) + ") and " + std::to_string(survivors.size()) +
                  " responses (need " + std::to_string(supp_h.size()) +
                  "); the product blocks are not determined by the surviving evaluations");
}

DecodeResult DecodeGgasp(const Responses& responses, const EvaluationPlan& plan,
                         const SchemeParams& params, std::span<const Exponent> supp_h,
                         MulCounter* counter) {
  CheckResponses(responses, plan);
  if (responses.size() < supp_h.size()) {
    throw Error(ErrorCode::kInsufficientResponses,
                std::to_string(responses.size()) + " responses, need " + std::to_string(supp_h.size()));
  }
  const Field& field = plan.field;
  const std::size_t rows = responses.begin()->second.rows();
  const std::size_t cols = responses.begin()->second.cols();
  std::vector<std::size_t> survivors;
  std::vector<const BlockMatrix*> ptrs;
  for (const auto& [w, v] : responses) {
    survivors.push_back(w);
    ptrs.push_back(&v);
  }
  const LinearSolution sol = SolveLinear(
      EvaluationMatrix(field, PointsOf(plan, survivors), supp_h), StackRows(field, ptrs), counter);
  if (!sol.unique()) {
    throw Error(ErrorCode::kInsufficientResponses,
                "survivor evaluation matrix has rank " + std::to_string(sol.rank) + " < " +
                    std::to_string(supp_h.size()));
  }
  if (!sol.all_consistent()) throw Error(ErrorCode::kInconsistentResponses, "responses contradict supp(h)");
  return DecodeResult{ReadBlocks(params, supp_h, sol.x, rows, cols), "full", survivors.size()};
}

bool SurvivorsDecode(const EvaluationPlan& plan, const SchemeParams& params,
                     const SupportSets& supports, std::span<const std::size_t> survivors,
                     const DecodeOptions& options) {
  const Field& field = plan.field;
  const std::vector<FieldElement> points = PointsOf(plan, survivors);
  if (!plan.mod_m) {
    return survivors.size() >= supports.supp_h.size() &&
           Rank(EvaluationMatrix(field, points, supports.supp_h)) == supports.supp_h.size();
  }
  const std::set<std::size_t> alive(survivors.begin(), survivors.end());
  const std::vector<std::size_t> complete = CompleteHypernodes(plan, alive);
  if (complete.size() >= supports.supp_hhat.size()) {
    std::vector<FieldElement> bases;
    for (std::size_t p : complete) bases.push_back(plan.a[p]);
    if (Rank(EvaluationMatrix(field, bases, supports.supp_hhat)) == supports.supp_hhat.size()) {
      return true;
    }
  }
  const BlockMatrix vander = EvaluationMatrix(field, points, supports.supp_h);
  if (survivors.size() >= supports.supp_h.size() && Rank(vander) == supports.supp_h.size()) {
    return true;
  }
  if (!options.partial) return false;
  return SolveLinear(vander.Transposed(), TargetSelector(field, params, supports.supp_h))
      .all_consistent();
}

u64 HashBlocks(const std::vector<BlockMatrix>& blocks) {
  std::string text;
  for (const BlockMatrix& b : blocks) {
    text += b.ToString();
    text.push_back('|');
  }
  return Fnv1a64(text);
}

// ---------------------------------------------------------------------------
// Protocol

SimReport RunProtocol(const PartitionedInput& input, const SchemeParams& params,
                      const EvaluationPlan& plan, const std::vector<std::size_t>& stragglers,
                      u64 seed, const SimOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  params.Validate();
  input.Validate();
  if (plan.mod_m != params.uses_mod_m() || (plan.mod_m && plan.m != params.m)) {
    throw Error(ErrorCode::kPlanInvalid, "plan layout does not match " + FormatSchemeSpec(params));
  }
  if (!(input.a_blocks.front().field() == plan.field)) {
    throw Error(ErrorCode::kPlanInvalid, "input and plan live in different fields");
  }
  const SupportSets supports = SymbolicSupport(params);
  const std::vector<Exponent>& decode_support = plan.mod_m ? supports.supp_hhat : supports.supp_h;
  if (options.verify_plan) {
    if (!plan.PointsDistinct()) throw Error(ErrorCode::kPlanInvalid, "worker points repeat");
    if (!PlanDecodable(plan, decode_support)) {
      throw Error(ErrorCode::kPlanInvalid, "plan fails the decodability check");
    }
    if (params.t > 0 && !SecurityCheck(plan, params)) {
      throw Error(ErrorCode::kPlanInvalid, "plan fails the T-security check");
    }
  }

  SimReport rep;
  rep.seed = seed;
  rep.scheme = FormatSchemeSpec(params);
  rep.field = plan.field->Spec();
  rep.num_workers = plan.num_workers();
  rep.num_hypernodes = plan.num_hypernodes();
  rep.zeta = plan.zeta.ToString();
  rep.straggler_set = stragglers;
  std::sort(rep.straggler_set.begin(), rep.straggler_set.end());
  rep.straggler_set.erase(std::unique(rep.straggler_set.begin(), rep.straggler_set.end()),
                          rep.straggler_set.end());
  for (std::size_t w : rep.straggler_set) {
    if (w >= plan.num_workers()) {
      throw Error(ErrorCode::kOutOfRange, "straggler " + std::to_string(w) + " out of range");
    }
  }

  Rng rng(seed);
  const std::vector<BlockMatrix> masks_a = DrawMasksA(input, params.t, rng);
  const std::vector<BlockMatrix> masks_b = DrawMasksB(input, params.t, rng);
  const MatPoly f = BuildF(input, params, masks_a);
  const MatPoly g = BuildG(input, params, masks_b);

  MulCounter encode, worker, decode;
  Responses responses;
  std::size_t next = 0;
  for (std::size_t w = 0; w < plan.num_workers(); ++w) {
    if (next < rep.straggler_set.size() && rep.straggler_set[next] == w) {
      ++next;
      continue;
    }
    const FieldElement& x = plan.worker_points[w];
    const BlockMatrix fx = EvalSparseHorner(f, x, &encode);
    const BlockMatrix gx = EvalSparseHorner(g, x, &encode);
    responses.emplace(w, Mul(fx, gx, &worker));
  }

  try {
    const DecodeResult res = plan.mod_m
                                 ? DecodeMp(responses, plan, params, supports, &decode, options.decode)
                                 : DecodeGgasp(responses, plan, params, supports.supp_h, &decode);
    rep.decode_path = res.path;
    rep.responses_used = res.responses_used;
    bool match = true;
    for (u64 k = 0; k < params.k && match; ++k) {
      for (u64 l = 0; l < params.l && match; ++l) {
        match = res.blocks[k * params.l + l] == input.ProductBlock(k, l);
      }
    }
    rep.decode_success = match;
    if (match) {
      rep.decoded_product_hash = HashBlocks(res.blocks);
    } else {
      rep.failure = "decoded blocks differ from the direct product";
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientResponses &&
        e.code() != ErrorCode::kInconsistentResponses) {
      throw;
    }
    rep.decode_success = false;
    rep.failure = e.what();
  }
  rep.mult_counts = {encode.count, worker.count, decode.count};
  if (options.timing) {
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Robustness

Rational POfSLowerBound(u64 k, u64 m, u64 l, u64 p, u64 s) {
  const u64 n = m * p;
  const u64 kml = k * m * l;
  if (kml + m - 1 <= n && s <= n - (kml + m - 1)) return Rational(1, 1);
  if (kml > n || s > n - kml) {
    throw Error(ErrorCode::kOutOfRange, "S = " + std::to_string(s) + " exceeds N - KML = " +
                                            std::to_string(static_cast<long long>(n) -
                                                           static_cast<long long>(kml)));
  }
  const u128 a = Binomial(p, k * l);
  const u128 b = Binomial(n - kml, s);
  if (b != 0 && a > (~u128{0}) / b) throw Error(ErrorCode::kOutOfRange, "p(S) numerator overflows");
  return Rational(a * b, Binomial(n, s));
}

POfSEstimate POfSEmpirical(const SchemeParams& params, const EvaluationPlan& plan, u64 s,
                           bool exhaustive, u64 trials, u64 seed, const DecodeOptions& options) {
  const std::size_t n = plan.num_workers();
  if (s > n) throw Error(ErrorCode::kOutOfRange, "more stragglers than workers");
  const SupportSets supports = SymbolicSupport(params);
  Rng rng(seed);
  const Field& field = plan.field;
  const PartitionedInput input = PartitionedInput::Random(field, params.k, params.m, params.l, 1, 1, 1, rng);
  const MatPoly f = BuildF(input, params, DrawMasksA(input, params.t, rng));
  const MatPoly g = BuildG(input, params, DrawMasksB(input, params.t, rng));
  std::vector<BlockMatrix> all(n);
  for (std::size_t w = 0; w < n; ++w) {
    all[w] = Mul(EvalSparseHorner(f, plan.worker_points[w]), EvalSparseHorner(g, plan.worker_points[w]));
  }
  std::vector<BlockMatrix> expected;
  for (u64 k = 0; k < params.k; ++k) {
    for (u64 l = 0; l < params.l; ++l) expected.push_back(input.ProductBlock(k, l));
  }

  POfSEstimate est;
  const auto attempt = [&](const std::vector<std::size_t>& stragglers) {
    Responses resp;
    std::size_t next = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (next < stragglers.size() && stragglers[next] == w) {
        ++next;
        continue;
      }
      resp.emplace(w, all[w]);
    }
    ++est.trials;
    try {
      const DecodeResult res = plan.mod_m ? DecodeMp(resp, plan, params, supports, nullptr, options)
                                          : DecodeGgasp(resp, plan, params, supports.supp_h);
      if (res.blocks == expected) ++est.successes;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInsufficientResponses) throw;
    }
    return true;
  };
  if (exhaustive) {
    const u128 total = Binomial(n, s);
    if (total > 1'000'000) {
      throw Error(ErrorCode::kBudgetExceeded, "C(" + std::to_string(n) + ", " + std::to_string(s) +
                                                  ") straggler sets exceed 10^6");
    }
    est.exhaustive = true;
    ForEachCombination(n, s, attempt);
  } else {
    for (u64 i = 0; i < trials; ++i) attempt(RandomSubset(n, s, rng));
  }
  return est;
}

RecoveryThresholdReport MpRecoveryThresholdWithSecurity(const SchemeParams& params,
                                                        const EvaluationPlan& plan,
                                                        const WitnessSearchOptions& options) {
  const SupportSets supports = SymbolicSupport(params);
  RecoveryThresholdReport rep;
  rep.n = plan.num_workers();
  rep.n_prime = supports.supp_h.size();
  rep.p = plan.mod_m ? plan.num_hypernodes() : plan.num_workers();
  rep.p_prime = plan.mod_m ? supports.supp_hhat.size() : supports.supp_h.size();
  rep.bound = rep.n - (rep.p - rep.p_prime) * (plan.mod_m ? 1 : 0);
  rep.gapless = supports.supp_h.back() + 1 == supports.supp_h.size();
  rep.threshold = rep.bound;
  rep.evidence = "certified bound N - (P - P')";
  if (rep.n_prime >= rep.bound) {
    rep.evidence = "N' >= N - (P - P'): the bound is already the smaller value";
  } else if (rep.gapless) {
    rep.threshold = rep.n_prime;
    rep.evidence = "supp(h) is gapless: any N' distinct points interpolate h";
  } else if (options.enabled) {
    MdsOptions mds;
    mds.budget = options.budget;
    mds.spot_check = !options.exhaustive;
    mds.samples = options.samples;
    mds.seed = options.seed;
    const MdsResult res = CheckMds(GeneralizedVandermonde(plan.field, plan.worker_points, supports.supp_h), mds);
    rep.searched = true;
    rep.search_exhaustive = res.exhaustive;
    rep.minors_checked = res.minors_checked;
    rep.full_code_mds = res.mds;
    rep.witness = res.witness;
    if (res.mds) {
      rep.threshold = rep.n_prime;
      rep.evidence = res.exhaustive ? "every N'-column minor is invertible (exhaustive)"
                                    : "no singular N'-column minor among " +
                                          std::to_string(res.minors_checked) +
                                          " random minors (non-exhaustive)";
    } else {
      rep.evidence = "singular N'-column minor found; certified bound N - (P - P') only";
    }
  }
  if (options.exact) {
    // Sizes below the threshold fail fast (first failing subset); a size
    // whose subsets all decode must be enumerated within the budget.
    const std::size_t n = rep.n;
    for (std::size_t size = std::max<std::size_t>(params.k * params.l, 1); size <= n; ++size) {
      std::vector<std::size_t> failure;
      u64 visited = 0;
      bool over_budget = false;
      const bool all = ForEachCombination(n, size, [&](const std::vector<std::size_t>& survivors) {
        if (++visited > options.budget) {
          over_budget = true;
          return false;
        }
        if (SurvivorsDecode(plan, params, supports, survivors)) return true;
        failure = survivors;
        return false;
      });
      if (over_budget) break;
      if (all) {
        rep.exact_threshold = size;
        break;
      }
      rep.exact_failure = failure;
    }
  }
  return rep;
}

}  // namespace mpcodes
