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
#include "mpcodes/linalg_checks.hpp"
#include "mpcodes/serialization.hpp"
#include "json.hpp"

namespace mpcodes {
namespace {

TEST(MatrixText, RoundTripPrimeAndExtension) {
  Rng rng(5);
  for (const Field& f : {MakeField(101, 1), MakeField(7, 3), MakeField((u64{1} << 61) - 1, 1)}) {
    const BlockMatrix m = BlockMatrix::Random(f, 3, 4, rng);
    const BlockMatrix back = MatrixFromText(MatrixToText(m));
    EXPECT_EQ(back, m);
    EXPECT_EQ(back.field(), f);
  }
}

TEST(MatrixText, Layout) {
  const Field f = MakeField(7, 1);
  BlockMatrix m(f, 2, 2);
  m.at(0, 1) = f->FromInt(3);
  m.at(1, 0) = f->FromInt(-1);
  EXPECT_EQ(MatrixToText(m), "2 2 7^1/0,1\n0 3\n6 0\n");
}

TEST(MatrixText, Malformed) {
  for (const char* bad : {"", "2 2 7\n0 3\n", "2 2 7\n0 3\n6\n", "x 2 7\n", "1 1 8\n0\n", "1 1 7\n9\n"}) {
    EXPECT_THROW(MatrixFromText(bad), Error) << bad;
  }
}

TEST(MatPolyJson, RoundTrip) {
  const Field f = MakeField(13, 2);
  Rng rng(1);
  MatPoly p(f, 2, 3);
  for (Exponent e : {0u, 4u, 17u}) p.AddTerm(e, BlockMatrix::Random(f, 2, 3, rng));
  EXPECT_EQ(MatPolyFromJson(MatPolyToJson(p)), p);
  EXPECT_THROW(MatPolyFromJson("{\"field\": 13}"), Error);
  EXPECT_THROW(MatPolyFromJson("not json"), Error);
}

TEST(PlanJson, RoundTrip) {
  const Field f = MakeField(31, 1);
  const auto res = FindEvaluationVector(SchemeParams::Mp(2, 3, 2, 1, 1), f);
  const EvaluationPlan back = PlanFromJson(PlanToJson(res.plan));
  EXPECT_EQ(back.field, res.plan.field);
  EXPECT_TRUE(back.mod_m);
  EXPECT_EQ(back.zeta, res.plan.zeta);
  EXPECT_EQ(back.a, res.plan.a);
  EXPECT_EQ(back.worker_points, res.plan.worker_points);
  EXPECT_EQ(back.seed, res.plan.seed);

  // find-eval documents nest the plan.
  const std::string nested = "{\"scheme\": \"x\", \"plan\": " + PlanToJson(res.plan) + "}";
  EXPECT_EQ(PlanFromJson(nested).worker_points, res.plan.worker_points);

  const auto direct = EvaluationPlan::Direct(f, {f->FromInt(1), f->FromInt(2), f->FromInt(9)});
  const EvaluationPlan d = PlanFromJson(PlanToJson(direct));
  EXPECT_FALSE(d.mod_m);
  EXPECT_EQ(d.worker_points, direct.worker_points);
}

TEST(ReportJson, ThresholdFields) {
  const auto j = nlohmann::json::parse(ThresholdReportToJson(MpThresholdClosedForm(2, 3, 2, 3, 1)));
  EXPECT_EQ(j.at("N"), 24);
  EXPECT_EQ(j.at("P"), 8);
  EXPECT_EQ(j.at("rate"), "1/2");
  EXPECT_EQ(j.at("scheme"), "mp:K=2,M=3,L=2,T=3,D=1");
}

TEST(ReportJson, SimReportOmitsUnsetTiming) {
  SimReport rep;
  rep.scheme = "mp:K=1,M=1,L=1,T=0,D=1";
  rep.decoded_product_hash = 0xabc;
  auto j = nlohmann::json::parse(SimReportToJson(rep));
  EXPECT_FALSE(j.contains("wall_time_ms"));
  EXPECT_EQ(j.at("decoded_product_hash"), "0000000000000abc");
  rep.wall_time_ms = 1.5;
  j = nlohmann::json::parse(SimReportToJson(rep));
  EXPECT_TRUE(j.contains("wall_time_ms"));
}

}  // namespace
}  // namespace mpcodes
