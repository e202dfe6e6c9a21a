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

#include <bit>
#include <set>

#include "mpcodes/error.hpp"
#include "mpcodes/matpoly.hpp"

namespace mpcodes {
namespace {

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

MatPoly RandomPoly(const Field& f, std::size_t rows, std::size_t cols, std::size_t terms, Exponent max_exp,
                   Rng& rng) {
  MatPoly p(f, rows, cols);
  while (p.terms().size() < terms) {
    BlockMatrix c = BlockMatrix::Random(f, rows, cols, rng);
    if (!c.is_zero()) p.SetTerm(UniformBelow(rng, max_exp + 1), std::move(c));
  }
  return p;
}

TEST(MatPoly, AddTermPrunesCancellation) {
  const Field f = MakeField(7, 1);
  MatPoly p(f, 1, 1);
  const BlockMatrix one = BlockMatrix::Scalar(f->One(), f);
  p.AddTerm(3, one);
  p.AddTerm(3, BlockMatrix::Scalar(f->FromInt(6), f));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), 0u);
}

TEST(MatPoly, ShapeMismatchRejected) {
  const Field f = MakeField(7, 1);
  MatPoly p(f, 2, 2);
  try {
    p.AddTerm(0, BlockMatrix(f, 1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(MatPoly, SparseHornerMatchesNaive) {
  Rng rng(11);
  for (const char* spec : {"13^2", "2305843009213693951", "2^8"}) {
    const Field f = ParseFieldSpec(spec);
    for (int i = 0; i < 200; ++i) {
      const MatPoly p = RandomPoly(f, 2, 3, 1 + UniformBelow(rng, 8), 300, rng);
      const FieldElement x = f->Random(rng);
      EXPECT_EQ(EvalSparseHorner(p, x), EvalNaive(p, x));
    }
  }
}

TEST(MatPoly, SparseHornerCountFormula) {
  const Field f = MakeField(kMersenne61, 1);
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const MatPoly p = RandomPoly(f, 1, 1, 1 + UniformBelow(rng, 10), 500, rng);
    const auto supp = Support(p);
    u64 expected = supp.size() - 1 + PowCost(supp.front()) + (supp.front() > 0 ? 1 : 0);
    for (std::size_t n = 1; n < supp.size(); ++n) expected += PowCost(supp[n] - supp[n - 1]);
    MulCounter c;
    EvalSparseHorner(p, f->RandomNonzero(rng), &c);
    EXPECT_EQ(c.count, expected);
  }
}

TEST(MatPoly, ModMTransformAgreesWithDefiningSum) {
  Rng rng(4);
  struct Case {
    const char* field;
    u64 m;
  };
  for (const Case c : {Case{"7", 3}, Case{"13^2", 4}, Case{"31", 5}, Case{"61", 6}}) {
    const Field f = ParseFieldSpec(c.field);
    const FieldElement zeta = PrimitiveRootOfUnity(f, c.m);
    for (int i = 0; i < 30; ++i) {
      const MatPoly p = RandomPoly(f, 2, 2, 10, 40, rng);
      const MatPoly hat = ModMTransform(p, c.m, zeta);
      EXPECT_EQ(hat, ModMTransformBySummation(p, c.m, zeta));
      for (Exponent e : Support(hat)) EXPECT_EQ(e % c.m, c.m - 1);
    }
  }
}

TEST(MatPoly, ModMTransformNeedsPrimitiveRoot) {
  const Field f = MakeField(7, 1);
  const MatPoly p = MatPoly::FromScalars(f, {{0, f->One()}});
  try {
    ModMTransform(p, 3, f->FromInt(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrimitiveRoot);
  }
}

TEST(MatPoly, Example21Transform) {
  const Field f = MakeField(7, 1);
  std::map<Exponent, FieldElement> v;
  for (Exponent e = 0; e <= 6; ++e) v[e] = f->FromInt(static_cast<std::int64_t>(e + 1));
  const MatPoly hat = ModMTransform(MatPoly::FromScalars(f, v), 3, f->FromInt(2));
  EXPECT_EQ(hat, MatPoly::FromScalars(f, {{2, v[2]}, {5, v[5]}}));
}

TEST(MatPoly, ProductSupportIsTheSumset) {
  // Over a large field random coefficients do not cancel.
  const Field f = MakeField(kMersenne61, 1);
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const MatPoly a = RandomPoly(f, 1, 1, 6, 40, rng);
    const MatPoly b = RandomPoly(f, 1, 1, 6, 40, rng);
    std::set<Exponent> sumset;
    for (Exponent x : Support(a)) {
      for (Exponent y : Support(b)) sumset.insert(x + y);
    }
    EXPECT_EQ(Support(PolyMul(a, b)), std::vector<Exponent>(sumset.begin(), sumset.end()));
  }
}

TEST(MatPoly, ProductEvaluatesMultiplicatively) {
  const Field f = MakeField(13, 2);
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const MatPoly a = RandomPoly(f, 2, 3, 4, 20, rng);
    const MatPoly b = RandomPoly(f, 3, 2, 4, 20, rng);
    const FieldElement x = f->Random(rng);
    EXPECT_EQ(EvalNaive(PolyMul(a, b), x), Mul(EvalNaive(a, x), EvalNaive(b, x)));
  }
}

TEST(MatPoly, InterpolationRecoversSparsePolynomials) {
  const Field f = MakeField(kMersenne61, 1);
  Rng rng(10);
  for (int i = 0; i < 30; ++i) {
    const MatPoly p = RandomPoly(f, 2, 2, 7, 60, rng);
    const auto supp = Support(p);
    std::vector<FieldElement> pts;
    std::vector<BlockMatrix> vals;
    for (std::size_t n = 0; n < supp.size() + 2; ++n) {
      pts.push_back(f->RandomNonzero(rng));
      vals.push_back(EvalNaive(p, pts.back()));
    }
    EXPECT_EQ(Interpolate(supp, pts, vals), p);
  }
}

TEST(MatPoly, InterpolationErrors) {
  const Field f = MakeField(7, 1);
  // {2, 8} cannot be separated over GF(7).
  const std::vector<Exponent> bad = {2, 8};
  const std::vector<FieldElement> pts = {f->FromInt(1), f->FromInt(2)};
  const std::vector<BlockMatrix> vals = {BlockMatrix::Scalar(f->One(), f), BlockMatrix::Scalar(f->One(), f)};
  try {
    Interpolate(bad, pts, vals);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularSystem);
  }
  const std::vector<Exponent> one = {0};
  const std::vector<BlockMatrix> clash = {BlockMatrix::Scalar(f->One(), f), BlockMatrix::Scalar(f->FromInt(2), f)};
  try {
    Interpolate(one, pts, clash);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInconsistentResponses);
  }
}

TEST(MatPoly, Example21Interpolation) {
  const Field f = MakeField(7, 1);
  const MatPoly hat = MatPoly::FromScalars(f, {{2, f->FromInt(4)}, {5, f->FromInt(6)}});
  const std::vector<FieldElement> pts = {f->FromInt(1), f->FromInt(3)};
  const std::vector<BlockMatrix> vals = {EvalNaive(hat, pts[0]), EvalNaive(hat, pts[1])};
  const std::vector<Exponent> supp = {2, 5};
  EXPECT_EQ(Interpolate(supp, pts, vals), hat);
}

}  // namespace
}  // namespace mpcodes
