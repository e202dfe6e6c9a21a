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

#include <benchmark/benchmark.h>

#include "mpcodes/linalg_checks.hpp"
#include "mpcodes/sdmm_protocol.hpp"

namespace mpcodes {
namespace {

const Field& BenchField() {
  static const Field f = MakeField((u64{1} << 61) - 1, 1);
  return f;
}

// Full encode / evaluate / decode round with two stragglers.
void BM_Protocol(benchmark::State& state) {
  const u64 t = static_cast<u64>(state.range(0));
  const auto params = state.range(1) == 0 ? SchemeParams::Mp(2, 3, 2, t, 1) : SchemeParams::Ggasp(2, 3, 2, t, 1);
  EvalSearchOptions opts;
  const auto th = Threshold(params);
  opts.points = params.uses_mod_m() ? th.p + 1 : th.n + 2;
  const auto plan = FindEvaluationVector(params, BenchField(), opts).plan;
  Rng rng(4);
  const auto in = PartitionedInput::Random(BenchField(), 2, 3, 2, 8, 8, 8, rng);
  SimOptions sim;
  sim.verify_plan = false;
  for (auto _ : state) {
    const auto rep = RunProtocol(in, params, plan, {0, 1}, 5, sim);
    if (!rep.decode_success) state.SkipWithError(rep.failure.c_str());
    benchmark::DoNotOptimize(rep.decoded_product_hash);
  }
}
BENCHMARK(BM_Protocol)->ArgsProduct({{1, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MdsCheck(benchmark::State& state) {
  const auto params = SchemeParams::Mp(2, 3, 2, static_cast<u64>(state.range(0)), 1);
  const auto res = FindEvaluationVector(params, BenchField());
  const auto sigma = BuildSecurityMatrices(res.plan, params);
  for (auto _ : state) benchmark::DoNotOptimize(IsMds(sigma.sigma_a));
}
BENCHMARK(BM_MdsCheck)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mpcodes
