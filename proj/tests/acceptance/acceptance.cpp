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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails. `--full` enumerates every minor of the T = 2 code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mpcodes/error.hpp"
#include "mpcodes/linalg.hpp"
#include "mpcodes/linalg_checks.hpp"
#include "mpcodes/matpoly.hpp"
#include "mpcodes/sdmm_protocol.hpp"
#include "mpcodes/thresholds.hpp"

namespace {

using namespace mpcodes;

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

struct Verdict {
  bool pass = true;
  std::string measured;

  void Check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!measured.empty()) measured += "; ";
    measured += (ok ? "" : "MISMATCH ") + what;
  }
};

std::string Str(const std::vector<Exponent>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

EvaluationPlan PowerPlan(u64 p, u64 zeta, u64 omega, const std::vector<u64>& exps) {
  const Field f = MakeField(p, 1);
  std::vector<FieldElement> a;
  for (u64 e : exps) a.push_back(Pow(f->FromInt(static_cast<std::int64_t>(omega)), e));
  return EvaluationPlan::ModM(f, f->FromInt(static_cast<std::int64_t>(zeta)), 3, a);
}

// 1. Closed forms against the support oracle.
Verdict GridEquality() {
  Verdict v;
  u64 points = 0, mp_bad = 0, gg_bad = 0;
  for (u64 k = 1; k <= 4; ++k)
    for (u64 m = 1; m <= 4; ++m)
      for (u64 l = 1; l <= 4; ++l)
        for (u64 t = 0; t <= 8; ++t) {
          for (u64 d = 1; d <= m; ++d) {
            if (Gcd(d, m) != 1) continue;
            ++points;
            if (MpThresholdClosedForm(k, m, l, t, d).n != ThresholdFromSupport(SchemeParams::Mp(k, m, l, t, d)).n)
              ++mp_bad;
          }
          const u64 rmax = t == 0 ? 1 : std::min(k * m, t);
          for (u64 r = 1; r <= rmax; ++r) {
            ++points;
            if (GgaspThresholdClosedForm(k, m, l, t, r).n !=
                ThresholdFromSupport(SchemeParams::Ggasp(k, m, l, t, r)).n)
              ++gg_bad;
          }
        }
  v.Check(mp_bad == 0 && gg_bad == 0, std::to_string(points) + " grid points, " + std::to_string(mp_bad) +
                                          " MP and " + std::to_string(gg_bad) + " GGASP disagreements");
  return v;
}

// 2. MP(K=L=2, M=3, T=3, D=1).
Verdict WorkedMpExample() {
  Verdict v;
  const auto params = SchemeParams::Mp(2, 3, 2, 3, 1);
  const auto rep = Threshold(params);
  v.Check(rep.p == 8 && rep.n == 24, "P=" + std::to_string(rep.p) + " N=" + std::to_string(rep.n));
  const auto hat = SymbolicSupport(params).supp_hhat;
  v.Check(hat == std::vector<Exponent>{2, 5, 8, 11, 14, 17, 20, 26}, "supp(hhat)=" + Str(hat));
  EvalSearchOptions no_escalate;
  no_escalate.escalate = false;
  bool base_found = true;
  try {
    FindEvaluationVector(params, MakeField(13, 1), no_escalate);
  } catch (const Error& e) {
    base_found = e.code() != ErrorCode::kBudgetExhausted;
  }
  v.Check(!base_found, "GF(13): no plan (13 < N + 1 = 25)");
  try {
    const auto res = FindEvaluationVector(params, MakeField(13, 1));
    const bool ok = res.plan.field->order() == 169 && PlanDecodable(res.plan, res.decode_support) &&
                    SecurityCheck(res.plan, params);
    v.Check(ok, "plan over " + res.plan.field->Spec());
  } catch (const Error& e) {
    v.Check(false, std::string("GF(13^2) search failed: ") + e.what());
  }
  return v;
}

// 3. GGASP(K=L=5, M=2, T=4) against MP with the same partition.
Verdict WorkedGgaspExample() {
  Verdict v;
  const auto opt = OptimalGgaspR(5, 2, 5, 4);
  v.Check(opt.r == 2 && opt.n == 82, "GGASP optimal r=" + std::to_string(opt.r) + " N=" + std::to_string(opt.n));
  const auto supp = SymbolicSupport(SchemeParams::Ggasp(5, 2, 5, 4, 2)).supp_h;
  v.Check(!supp.empty() && supp.back() == 114, "deg(h)=" + std::to_string(supp.empty() ? 0 : supp.back()));
  const u64 mp = Threshold(SchemeParams::Mp(5, 2, 5, 4, 1)).n;
  v.Check(mp == 82, "MP N=" + std::to_string(mp));
  return v;
}

// 4. Without security MP meets KML; full interpolation needs KML + M - 1.
Verdict ZeroSecurity() {
  Verdict v;
  Rng rng(4);
  u64 mp_bad = 0, gg_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const u64 k = 1 + UniformBelow(rng, 8), m = 1 + UniformBelow(rng, 8), l = 1 + UniformBelow(rng, 8);
    if (Threshold(SchemeParams::Mp(k, m, l, 0, 1)).n != k * m * l) ++mp_bad;
    if (Threshold(SchemeParams::Ggasp(k, m, l, 0, 1)).n != k * m * l + m - 1) ++gg_bad;
  }
  v.Check(mp_bad == 0 && gg_bad == 0, "50 triples: " + std::to_string(mp_bad) + " MP != KML, " +
                                          std::to_string(gg_bad) + " GGASP != KML+M-1");
  return v;
}

std::string Fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

// 5. p(S) for T = 0 over GF(31).
Verdict StragglerProbabilities() {
  Verdict v;
  const auto params = SchemeParams::Mp(2, 3, 2, 0, 1);
  const auto plan = PowerPlan(31, 5, 15, {0, 1, 2, 3, 4, 5});
  const auto p4 = POfSEmpirical(params, plan, 4, true, 0, 1);
  v.Check(p4.successes == p4.trials && p4.trials == 3060,
          "p(4)=" + std::to_string(p4.successes) + "/" + std::to_string(p4.trials));
  const auto p5 = POfSEmpirical(params, plan, 5, true, 0, 1);
  const auto p6 = POfSEmpirical(params, plan, 6, true, 0, 1);
  v.Check(p5.trials == 8568 && p5.fraction() >= Rational(90, 8568),
          "p(5)=" + std::to_string(p5.successes) + "/" + std::to_string(p5.trials) + " >= 90/8568");
  v.Check(p6.trials == 18564 && p6.fraction() >= Rational(15, 18564),
          "p(6)=" + std::to_string(p6.successes) + "/" + std::to_string(p6.trials) + " >= 15/18564");
  const std::string b5 = Fixed4(POfSLowerBound(2, 3, 2, 6, 5).ToDouble());
  const std::string b6 = Fixed4(POfSLowerBound(2, 3, 2, 6, 6).ToDouble());
  v.Check(b5 == "0.0105" && b6 == "0.0008", "bounds " + b5 + ", " + b6);
  return v;
}

// 6. T = 1 over GF(31), 24 workers.
Verdict TOneRobustness() {
  Verdict v;
  const auto params = SchemeParams::Mp(2, 3, 2, 1, 1);
  const auto plan = PowerPlan(31, 5, 15, {0, 1, 2, 3, 4, 5, 6, 7});
  const auto sup = SymbolicSupport(params);
  v.Check(sup.supp_h.size() == 22, "N'=" + std::to_string(sup.supp_h.size()));
  v.Check(sup.supp_hhat.size() == 6, "P'=" + std::to_string(sup.supp_hhat.size()) + " " + Str(sup.supp_hhat));
  u64 pairs = 0, pair_ok = 0;
  ForEachCombination(24, 22, [&](const std::vector<std::size_t>& s) {
    ++pairs;
    if (SurvivorsDecode(plan, params, sup, s)) ++pair_ok;
    return true;
  });
  v.Check(pairs == 276 && pair_ok == pairs,
          std::to_string(pair_ok) + "/" + std::to_string(pairs) + " survivor sets of size 22 decode");
  Rng rng(6);
  u64 sampled_ok = 0;
  const u64 samples = 1000;
  for (u64 i = 0; i < samples; ++i) {
    // At least 6 complete hypernodes, extra workers elsewhere at random.
    const std::size_t complete = 6 + UniformBelow(rng, 3);
    const auto hyper = RandomSubset(8, complete, rng);
    std::vector<std::size_t> survivors;
    for (std::size_t w = 0; w < plan.num_workers(); ++w) {
      const bool in_hyper = std::binary_search(hyper.begin(), hyper.end(), plan.hypernode_of[w]);
      if (in_hyper || UniformBelow(rng, 2) == 1) survivors.push_back(w);
    }
    if (SurvivorsDecode(plan, params, sup, survivors)) ++sampled_ok;
  }
  v.Check(sampled_ok == samples, std::to_string(sampled_ok) + "/" + std::to_string(samples) +
                                     " sampled sets with >= 6 complete hypernodes decode");
  return v;
}

// 7. T = 2 over GF(61).
Verdict TTwoRobustness(bool full) {
  Verdict v;
  const auto params = SchemeParams::Mp(2, 3, 2, 2, 1);
  const auto plan = PowerPlan(61, 47, 8, {0, 1, 2, 3, 4, 7, 8, 9, 12, 13});
  v.Check(SecurityCheck(plan, params), "security_check");
  const auto supp = SymbolicSupport(params).supp_h;
  const std::size_t dim = Rank(GeneralizedVandermonde(plan.field, plan.worker_points, supp));
  v.Check(supp.size() == 25 && dim == 25, "N'=" + std::to_string(supp.size()) + ", code dimension " +
                                              std::to_string(dim));
  WitnessSearchOptions opts;
  opts.exhaustive = full;
  opts.samples = 10'000;
  const auto rep = MpRecoveryThresholdWithSecurity(params, plan, opts);
  std::string minors = std::to_string(rep.minors_checked) + (rep.search_exhaustive ? " (all)" : " random") +
                       " 25-minors: " + (rep.full_code_mds ? "all full rank" : "singular minor found");
  if (!rep.witness.empty()) {
    std::vector<std::size_t> missing;
    for (std::size_t w = 0; w < plan.num_workers(); ++w)
      if (!std::binary_search(rep.witness.begin(), rep.witness.end(), w)) missing.push_back(w);
    minors += ", missing workers {";
    for (std::size_t i = 0; i < missing.size(); ++i) minors += (i ? "," : "") + std::to_string(missing[i]);
    minors += "}";
  }
  v.Check(rep.full_code_mds, minors);
  v.Check(rep.threshold == 25 && rep.threshold < rep.bound,
          "threshold " + std::to_string(rep.threshold) + " vs bound " + std::to_string(rep.bound));
  return v;
}

// 8. Randomized end-to-end runs over GF(2^61 - 1).
Verdict EndToEnd() {
  Verdict v;
  const Field f = MakeField(kMersenne61, 1);
  Rng rng(8);
  std::map<std::string, EvaluationPlan> plans;
  u64 runs = 0, failures = 0, mp_runs = 0;
  std::string first_failure;
  while (runs < 500) {
    const u64 k = 1 + UniformBelow(rng, 3), m = 1 + UniformBelow(rng, 3), l = 1 + UniformBelow(rng, 3);
    const u64 t = UniformBelow(rng, 4);
    SchemeParams params;
    if (UniformBelow(rng, 2) == 0) {
      std::vector<u64> ds;
      for (u64 d = 1; d <= m; ++d)
        if (Gcd(d, m) == 1) ds.push_back(d);
      params = SchemeParams::Mp(k, m, l, t, ds[UniformBelow(rng, ds.size())]);
    } else {
      const u64 rmax = t == 0 ? 1 : std::min(k * m, t);
      params = SchemeParams::Ggasp(k, m, l, t, 1 + UniformBelow(rng, rmax));
    }
    const std::string key = FormatSchemeSpec(params);
    auto it = plans.find(key);
    if (it == plans.end()) {
      const auto th = Threshold(params);
      EvalSearchOptions opts;
      opts.points = params.uses_mod_m() ? th.p + 2 : th.n + 2;
      it = plans.emplace(key, FindEvaluationVector(params, f, opts).plan).first;
    }
    const EvaluationPlan& plan = it->second;
    const auto in = PartitionedInput::Random(f, k, m, l, 1 + UniformBelow(rng, 3), 1 + UniformBelow(rng, 3),
                                             1 + UniformBelow(rng, 3), rng);
    const auto stragglers = RandomSubset(plan.num_workers(), 2, rng);
    const auto rep = RunProtocol(in, params, plan, stragglers, rng());
    ++runs;
    if (params.uses_mod_m()) ++mp_runs;
    if (!rep.decode_success) {
      ++failures;
      if (first_failure.empty()) first_failure = ", first: " + key + " " + rep.failure;
    }
  }
  v.Check(failures == 0, std::to_string(runs - failures) + "/" + std::to_string(runs) + " runs exact (" +
                             std::to_string(mp_runs) + " MP, " + std::to_string(plans.size()) + " schemes)" +
                             first_failure);
  return v;
}

// 9. T = 2: D sharing a factor with M is never secure; coprime D is.
Verdict SecurityCriterion() {
  Verdict v;
  const Field f = MakeField(1000000009, 1);
  Rng rng(9);
  u64 insecure_cases = 0, insecure_ok = 0, coprime_cases = 0, coprime_ok = 0;
  for (u64 m : {2, 3, 4, 6}) {
    const FieldElement zeta = PrimitiveRootOfUnity(f, m);
    for (u64 d = 1; d <= 2 * m; ++d) {
      if (Gcd(d, m) == 1) {
        if (d > m) continue;
        ++coprime_cases;
        try {
          const auto params = SchemeParams::Mp(2, m, 2, 2, d);
          const auto res = FindEvaluationVector(params, f);
          if (SecurityCheck(res.plan, params)) ++coprime_ok;
        } catch (const Error&) {
        }
        continue;
      }
      // alpha = beta = (0, D) without the admissibility filter.
      const auto params = SchemeParams::Custom(2, m, 2, {0, d}, {0, d});
      const u64 p = ThresholdFromSupport(params).p;
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<FieldElement> a;
        for (u64 i = 0; i < p; ++i) a.push_back(f->RandomNonzero(rng));
        ++insecure_cases;
        if (!SecurityCheck(EvaluationPlan::ModM(f, zeta, m, a), params)) ++insecure_ok;
      }
    }
  }
  v.Check(insecure_ok == insecure_cases, std::to_string(insecure_ok) + "/" + std::to_string(insecure_cases) +
                                             " gcd(D,M)>1 vectors rejected");
  v.Check(coprime_ok == coprime_cases,
          std::to_string(coprime_ok) + "/" + std::to_string(coprime_cases) + " coprime D found a secure plan");
  return v;
}

u64 CeilLog2(u64 x) {
  u64 bits = 0;
  while ((u64{1} << bits) < x) ++bits;
  return bits;
}

// 10. Sparse Horner values and multiplication counts.
Verdict SparseHorner() {
  Verdict v;
  Rng rng(10);
  const Field f = MakeField(kMersenne61, 1);
  u64 value_bad = 0, count_bad = 0;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t rows = 1 + UniformBelow(rng, 2), cols = 1 + UniformBelow(rng, 2);
    const u64 span = u64{1} << (1 + UniformBelow(rng, 20));
    const std::size_t terms = 1 + UniformBelow(rng, 12);
    MatPoly poly(f, rows, cols);
    for (std::size_t j = 0; j < terms; ++j) poly.AddTerm(UniformBelow(rng, span), BlockMatrix::Random(f, rows, cols, rng));
    const auto supp = Support(poly);
    if (supp.empty()) continue;
    u64 delta = supp.front();
    for (std::size_t j = 1; j < supp.size(); ++j) delta = std::max(delta, supp[j] - supp[j - 1]);
    const FieldElement x = f->Random(rng);
    MulCounter horner, naive;
    if (EvalSparseHorner(poly, x, &horner) != EvalNaive(poly, x, &naive)) ++value_bad;
    const u64 n = supp.size();
    const u64 per_entry = (n - 1) + 2 * CeilLog2(delta + 1) * n;
    if (horner.count > per_entry * rows * cols) ++count_bad;
    worst = std::max(worst, static_cast<double>(horner.count) / static_cast<double>(per_entry * rows * cols));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", worst);
  v.Check(value_bad == 0, std::to_string(value_bad) + "/1000 value mismatches");
  v.Check(count_bad == 0, std::to_string(count_bad) + "/1000 over the count bound (max ratio " + buf + ")");
  return v;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// 11. Byte-identical CLI output for identical seeds.
Verdict Determinism(const std::string& tmp) {
  Verdict v;
  const std::string cli = MPCODES_CLI_PATH;
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"simulate", "simulate --scheme mp:K=2,M=3,L=2,T=3 --field 2305843009213693951 --stragglers random:2 "
                   "--points 10 --seed 42 --format json"},
      {"sweep", "sweep --k 1-4 --m 1-4 --l 1-4 --t-min 0 --t-max 12 --seed 42"},
  };
  for (const auto& [name, args] : cmds) {
    std::string outs[2];
    bool ran = true;
    for (int i = 0; i < 2; ++i) {
      const std::string file = tmp + "/acceptance_" + name + "_" + std::to_string(i) + ".out";
      std::remove(file.c_str());
      ran = ran && std::system(("\"" + cli + "\" " + args + " -o \"" + file + "\"").c_str()) == 0;
      outs[i] = Slurp(file);
    }
    v.Check(ran && !outs[0].empty() && outs[0] == outs[1],
            name + ": " + std::to_string(outs[0].size()) + " bytes" + (outs[0] == outs[1] ? " identical" : " differ"));
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i) full = full || std::string(argv[i]) == "--full";
  const char* tmp_env = std::getenv("TMPDIR");
  const std::string tmp = tmp_env != nullptr ? tmp_env : "/tmp";

  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"closed forms equal the support oracle on the K,M,L<=4, T<=8 grid", GridEquality},
      {"MP(K=L=2,M=3,T=3): P=8, N=24, plan needs GF(13^2)", WorkedMpExample},
      {"GGASP(K=L=5,M=2,T=4): r=2, N=82, deg 114; MP also 82", WorkedGgaspExample},
      {"T=0: MP N=KML, full interpolation KML+M-1", ZeroSecurity},
      {"T=0 over GF(31): p(4)=1, p(5), p(6) and bound values", StragglerProbabilities},
      {"T=1 over GF(31): N'=22, P'=6, survivor sets decode", TOneRobustness},
      {"T=2 over GF(61): secure, N'=25, MDS minors, threshold 25", [full] { return TTwoRobustness(full); }},
      {"500 randomized protocol runs decode exactly", EndToEnd},
      {"T=2 security: gcd(D,M)>1 always fails, coprime D succeeds", SecurityCriterion},
      {"sparse Horner equals naive evaluation within the count bound", SparseHorner},
      {"simulate and sweep are byte-identical across runs", [tmp] { return Determinism(tmp); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v.Check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failed;
    std::printf("[%s] %2zu %s (%s; %.1fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                v.measured.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
