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

#include "mpcodes/code_schemes.hpp"
#include "mpcodes/error.hpp"

namespace mpcodes {
namespace {

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

ErrorCode ParseCode(const std::string& spec) {
  try {
    ParseSchemeSpec(spec);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIoError;  // sentinel: parsed fine
}

TEST(SchemeSpec, RoundTripsCanonically) {
  for (const char* spec : {"mp:K=2,M=3,L=2,T=3,D=1", "ggasp:K=5,M=2,L=5,T=4,r=2", "mp:K=1,M=5,L=1,T=2,D=3",
                           "custom:K=2,M=3,L=2,T=2,alpha=0;1,beta=0;2"}) {
    const SchemeParams p = ParseSchemeSpec(spec);
    EXPECT_EQ(FormatSchemeSpec(p), spec);
    EXPECT_EQ(ParseSchemeSpec(FormatSchemeSpec(p)), p);
  }
}

TEST(SchemeSpec, Defaults) {
  EXPECT_EQ(ParseSchemeSpec("mp:K=2,M=3,L=2,T=3").d(), 1u);
  EXPECT_EQ(ParseSchemeSpec("ggasp:K=2,M=3,L=2,T=0").kind(), SchemeKind::kGgasp);
}

TEST(SchemeSpec, Errors) {
  EXPECT_EQ(ParseCode("mp:K=2,M=4,L=2,T=3,D=2"), ErrorCode::kBadD);
  EXPECT_EQ(ParseCode("mp:K=2,M=3,L=2,T=3,D=4"), ErrorCode::kBadD);
  EXPECT_EQ(ParseCode("ggasp:K=2,M=1,L=2,T=4,r=3"), ErrorCode::kBadR);
  EXPECT_EQ(ParseCode("ggasp:K=2,M=3,L=2,T=4"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("rou:K=2,M=3,L=2,T=4"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("mp:K=0,M=3,L=2,T=4"), ErrorCode::kBadParams);
  EXPECT_EQ(ParseCode("custom:K=1,M=2,L=1,T=2,alpha=1;0,beta=0;1"), ErrorCode::kBadParams);
}

TEST(Shifts, GgaspAlpha) {
  EXPECT_EQ(GgaspAlpha(5, 2, 4, 2), (std::vector<Exponent>{0, 1, 10, 11}));
  EXPECT_EQ(GgaspAlpha(2, 2, 5, 4), (std::vector<Exponent>{0, 1, 2, 3, 4}));
  EXPECT_EQ(GgaspAlpha(2, 2, 3, 1), (std::vector<Exponent>{0, 4, 8}));
  EXPECT_TRUE(GgaspAlpha(2, 2, 0, 7).empty());
  EXPECT_THROW(GgaspAlpha(5, 2, 4, 5), Error);
  EXPECT_THROW(GgaspAlpha(5, 2, 4, 0), Error);
}

TEST(Shifts, MpIsArithmetic) {
  const SchemeParams p = SchemeParams::Mp(2, 5, 2, 4, 3);
  EXPECT_EQ(p.alpha(), (std::vector<Exponent>{0, 3, 6, 9}));
  EXPECT_EQ(p.beta(), p.alpha());
}

class Encoding : public ::testing::Test {
 protected:
  Field field = MakeField(kMersenne61, 1);
  Rng rng{21};
};

TEST_F(Encoding, MpExponentsOfWorkedExample) {
  const SchemeParams p = SchemeParams::Mp(2, 3, 2, 3, 1);
  const auto in = PartitionedInput::Random(field, 2, 3, 2, 1, 1, 1, rng);
  EXPECT_EQ(Support(BuildF(in, p, DrawMasksA(in, 3, rng))),
            (std::vector<Exponent>{0, 1, 2, 3, 4, 5, 12, 13, 14}));
  EXPECT_EQ(Support(BuildG(in, p, DrawMasksB(in, 3, rng))),
            (std::vector<Exponent>{0, 1, 2, 6, 7, 8, 12, 13, 14}));
}

TEST_F(Encoding, GgaspRandomTerms) {
  const SchemeParams p = SchemeParams::Ggasp(5, 2, 5, 4, 2);
  const auto in = PartitionedInput::Random(field, 5, 2, 5, 1, 1, 1, rng);
  const MatPoly f = BuildF(in, p, DrawMasksA(in, 4, rng));
  const MatPoly g = BuildG(in, p, DrawMasksB(in, 4, rng));
  for (Exponent e : {50, 51, 60, 61}) EXPECT_FALSE(f.Coeff(e).is_zero()) << e;
  for (Exponent e : {50, 51, 52, 53}) EXPECT_FALSE(g.Coeff(e).is_zero()) << e;
  EXPECT_EQ(Support(f).size(), 14u);
  EXPECT_EQ(Support(g).size(), 14u);
}

TEST_F(Encoding, BlocksLandWhereExpected) {
  const SchemeParams p = SchemeParams::Mp(2, 3, 2, 0, 1);
  const auto in = PartitionedInput::Random(field, 2, 3, 2, 2, 2, 3, rng);
  const MatPoly h = PolyMul(BuildF(in, p, {}), BuildG(in, p, {}));
  for (const auto& [kl, e] : ProductBlockPositions(p)) {
    EXPECT_EQ(h.Coeff(e), in.ProductBlock(kl.first, kl.second));
  }
  const auto pos = ProductBlockPositions(p);
  EXPECT_EQ(pos.at({0, 0}), 2u);
  EXPECT_EQ(pos.at({1, 0}), 5u);
  EXPECT_EQ(pos.at({0, 1}), 8u);
  EXPECT_EQ(pos.at({1, 1}), 11u);
}

TEST_F(Encoding, MaskCountChecked) {
  const SchemeParams p = SchemeParams::Mp(2, 3, 2, 3, 1);
  const auto in = PartitionedInput::Random(field, 2, 3, 2, 1, 1, 1, rng);
  EXPECT_THROW(BuildF(in, p, DrawMasksA(in, 2, rng)), Error);
}

TEST_F(Encoding, PartitionOfFullMatrices) {
  const BlockMatrix a = BlockMatrix::Random(field, 4, 6, rng);
  const BlockMatrix b = BlockMatrix::Random(field, 6, 4, rng);
  const auto in = PartitionedInput::FromMatrices(a, b, 2, 3, 2);
  const BlockMatrix c = Mul(a, b);
  for (u64 k = 0; k < 2; ++k) {
    for (u64 l = 0; l < 2; ++l) {
      const BlockMatrix blk = in.ProductBlock(k, l);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(blk.at(i, j), c.at(2 * k + i, 2 * l + j));
      }
    }
  }
  EXPECT_THROW(PartitionedInput::FromMatrices(a, b, 3, 3, 2), Error);
}

}  // namespace
}  // namespace mpcodes
