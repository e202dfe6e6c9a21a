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

#include <gtest/gtest.h>

#include "mpcodes/error.hpp"
#include "mpcodes/linalg.hpp"
#include "mpcodes/linalg_checks.hpp"
#include "mpcodes/thresholds.hpp"

namespace mpcodes {
namespace {

std::vector<FieldElement> Ints(const Field& f, std::initializer_list<std::int64_t> xs) {
  std::vector<FieldElement> v;
  for (auto x : xs) v.push_back(f->FromInt(x));
  return v;
}

TEST(Linalg, DeterminantAndRank) {
  const Field f = MakeField(7, 1);
  BlockMatrix m(f, 2, 2);
  m.at(0, 0) = f->FromInt(1);
  m.at(0, 1) = f->FromInt(2);
  m.at(1, 0) = f->FromInt(3);
  m.at(1, 1) = f->FromInt(6);
  EXPECT_TRUE(Determinant(m).is_zero());
  EXPECT_EQ(Rank(m), 1u);
  EXPECT_EQ(Determinant(BlockMatrix::Identity(f, 3)), f->One());
}

TEST(Linalg, SolveLinearReportsInconsistency) {
  const Field f = MakeField(13, 1);
  BlockMatrix a(f, 2, 1), b(f, 2, 1);
  a.at(0, 0) = f->One();
  a.at(1, 0) = f->One();
  b.at(0, 0) = f->FromInt(1);
  b.at(1, 0) = f->FromInt(2);
  EXPECT_FALSE(SolveLinear(a, b).all_consistent());
  b.at(1, 0) = f->FromInt(1);
  const auto sol = SolveLinear(a, b);
  EXPECT_TRUE(sol.all_consistent());
  EXPECT_TRUE(sol.unique());
}

TEST(Mds, VandermondeWithDistinctPointsIsMds) {
  const Field f = MakeField(31, 1);
  const auto pts = Ints(f, {1, 2, 3, 4, 5, 6, 7});
  const std::vector<Exponent> exps = {0, 1, 2};
  const auto res = CheckMds(GeneralizedVandermonde(f, pts, exps));
  EXPECT_TRUE(res.mds);
  EXPECT_TRUE(res.exhaustive);
  EXPECT_EQ(res.minors_checked, 35u);
}

TEST(Mds, RepeatedPointGivesWitness) {
  const Field f = MakeField(31, 1);
  const auto pts = Ints(f, {1, 2, 3, 2});
  const std::vector<Exponent> exps = {0, 1};
  const auto res = CheckMds(GeneralizedVandermonde(f, pts, exps));
  EXPECT_FALSE(res.mds);
  EXPECT_EQ(res.witness, (std::vector<std::size_t>{1, 3}));
}

TEST(Mds, BudgetAndSpotCheck) {
  const Field f = MakeField(61, 1);
  std::vector<FieldElement> pts;
  for (int i = 1; i <= 30; ++i) pts.push_back(f->FromInt(i));
  const std::vector<Exponent> exps = {0, 1, 2, 3, 4};
  const BlockMatrix gv = GeneralizedVandermonde(f, pts, exps);
  MdsOptions tight;
  tight.budget = 1000;
  try {
    CheckMds(gv, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  MdsOptions spot;
  spot.spot_check = true;
  spot.samples = 500;
  const auto res = CheckMds(gv, spot);
  EXPECT_TRUE(res.mds);
  EXPECT_FALSE(res.exhaustive);
  EXPECT_EQ(res.minors_checked, 500u);
  EXPECT_THROW(CheckMds(GeneralizedVandermonde(f, std::vector<FieldElement>(pts.begin(), pts.begin() + 3), exps)), Error);
}

TEST(Decodability, Example21) {
  const Field f = MakeField(7, 1);
  const std::vector<Exponent> good = {2, 5}, bad = {2, 8};
  EXPECT_TRUE(DecodabilityCheck(EvaluationPlan::ModM(f, f->FromInt(2), 3, Ints(f, {1, 3})), good));
  for (std::int64_t x = 0; x < 7; ++x) {
    for (std::int64_t y = 0; y < 7; ++y) {
      EXPECT_FALSE(DecodabilityCheck(EvaluationPlan::ModM(f, f->FromInt(2), 3, Ints(f, {x, y})), bad));
    }
  }
}

TEST(Decodability, PlanDecodableUsesEveryPoint) {
  const Field f = MakeField(61, 1);
  const auto plan = EvaluationPlan::Direct(f, Ints(f, {1, 2, 3, 4}));
  const std::vector<Exponent> supp = {0, 1, 2};
  EXPECT_TRUE(PlanDecodable(plan, supp));
  const std::vector<Exponent> wide = {0, 1, 2, 3, 4};
  EXPECT_FALSE(PlanDecodable(plan, wide));
}

TEST(Security, Example31) {
  const Field f = MakeField(13, 1);
  const auto plan = EvaluationPlan::ModM(f, f->FromInt(12), 2, Ints(f, {1, 2, 3, 4}));
  EXPECT_TRUE(SecurityCheck(plan, SchemeParams::Custom(1, 2, 1, {0, 1}, {0, 1})));
  const auto detail = SecurityCheckDetailed(plan, SchemeParams::Custom(1, 2, 1, {0, 2}, {0, 2}));
  EXPECT_FALSE(detail.secure);
  EXPECT_FALSE(detail.sigma_a.mds);
  EXPECT_EQ(detail.sigma_a.witness.size(), 2u);
}

TEST(Security, ZeroPointRejected) {
  const Field f = MakeField(13, 1);
  const auto plan = EvaluationPlan::ModM(f, f->FromInt(3), 3, Ints(f, {0, 2}));
  try {
    SecurityCheck(plan, SchemeParams::Mp(1, 3, 1, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroEvaluationPoint);
  }
  EXPECT_TRUE(SecurityCheck(plan, SchemeParams::Mp(1, 3, 1, 0, 1)));
}

TEST(Security, NonCoprimeShiftAlwaysFails) {
  const Field f = MakeField(1000000009, 1);
  Rng rng(5);
  for (u64 m : {2, 3, 4, 6}) {
    for (u64 d = 2; d <= m; ++d) {
      if (Gcd(d, m) == 1) continue;
      for (int i = 0; i < 10; ++i) {
        std::vector<FieldElement> a;
        for (int p = 0; p < 4; ++p) a.push_back(f->RandomNonzero(rng));
        const auto plan = EvaluationPlan::ModM(f, PrimitiveRootOfUnity(f, m), m, a);
        EXPECT_FALSE(SecurityCheck(plan, SchemeParams::Custom(2, m, 2, {0, d}, {0, d})));
      }
    }
  }
}

TEST(Security, SixPointFiveInstances) {
  const Field f61 = MakeField(61, 1);
  std::vector<FieldElement> a;
  for (u64 e : {0, 1, 2, 3, 4, 7, 8, 9, 12, 13}) a.push_back(Pow(f61->FromInt(8), e));
  const auto plan = EvaluationPlan::ModM(f61, f61->FromInt(47), 3, a);
  EXPECT_TRUE(SecurityCheck(plan, SchemeParams::Mp(2, 3, 2, 2, 1)));
  EXPECT_TRUE(NecessaryConditionsHold(plan));
}

TEST(EvalSearch, WorkedExampleNeedsAnExtension) {
  const auto params = SchemeParams::Mp(2, 3, 2, 3, 1);
  EvalSearchOptions opts;
  opts.escalate = false;
  try {
    FindEvaluationVector(params, MakeField(13, 1), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExhausted);
  }
  opts.escalate = true;
  const auto res = FindEvaluationVector(params, MakeField(13, 1), opts);
  EXPECT_EQ(res.plan.field->order(), 169u);
  EXPECT_EQ(res.plan.num_hypernodes(), 8u);
  EXPECT_EQ(res.decode_support, SymbolicSupport(params).supp_hhat);
  EXPECT_TRUE(DecodabilityCheck(res.plan, res.decode_support));
  EXPECT_TRUE(SecurityCheck(res.plan, params));
  ASSERT_FALSE(res.diagnostics.degrees.empty());
  EXPECT_FALSE(res.diagnostics.degrees[0].skipped.empty());
}

TEST(EvalSearch, WitnessModulusWorksDirectly) {
  EvalSearchOptions opts;
  opts.escalate = false;
  const auto res = FindEvaluationVector(SchemeParams::Mp(2, 3, 2, 3, 1), MakeFieldWithModulus(13, {2, 12, 1}), opts);
  EXPECT_EQ(res.plan.field->Spec(), "13^2/2,12,1");
}

TEST(EvalSearch, DeterministicGivenSeed) {
  const auto params = SchemeParams::Ggasp(2, 2, 2, 3, 2);
  EvalSearchOptions opts;
  opts.seed = 77;
  const Field f = MakeField(1000000009, 1);
  const auto a = FindEvaluationVector(params, f, opts);
  const auto b = FindEvaluationVector(params, f, opts);
  EXPECT_EQ(a.plan.worker_points, b.plan.worker_points);
  EXPECT_EQ(a.plan.seed, 77u);
}

TEST(EvalSearch, CoprimeShiftsSucceed) {
  const Field f = MakeField(1000000009, 1);
  for (u64 m : {2, 3, 4, 6}) {
    for (u64 d = 1; d <= m; ++d) {
      if (Gcd(d, m) != 1) continue;
      EXPECT_NO_THROW(FindEvaluationVector(SchemeParams::Mp(2, m, 2, 2, d), f)) << m << "," << d;
    }
  }
}

TEST(EvalSearch, SubgroupSampling) {
  EvalSearchOptions opts;
  opts.subgroup = true;
  const auto res = FindEvaluationVector(SchemeParams::Mp(2, 3, 2, 0, 1), MakeField(31, 1), opts);
  for (const auto& a : res.plan.a) EXPECT_TRUE(Pow(a, 10).is_one());
}

}  // namespace
}  // namespace mpcodes
