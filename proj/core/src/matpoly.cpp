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

#include "mpcodes/matpoly.hpp"

#include <algorithm>
#include <string>

#include "mpcodes/error.hpp"
#include "mpcodes/linalg.hpp"

namespace mpcodes {

MatPoly::MatPoly(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {}

MatPoly MatPoly::FromScalars(Field field, const std::map<Exponent, FieldElement>& coeffs) {
  MatPoly p(field, 1, 1);
  for (const auto& [e, v] : coeffs) p.SetTerm(e, BlockMatrix::Scalar(v, field));
  return p;
}

Exponent MatPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void MatPoly::CheckShape(const BlockMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) {
    throw Error(ErrorCode::kShapeMismatch, "coefficient is " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()) + ", polynomial expects " +
                                               std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (!(m.field() == field_)) throw Error(ErrorCode::kFieldMismatch, "coefficient field differs");
}

void MatPoly::AddTerm(Exponent e, const BlockMatrix& coeff) {
  CheckShape(coeff);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(e, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void MatPoly::SetTerm(Exponent e, BlockMatrix coeff) {
  CheckShape(coeff);
  if (coeff.is_zero()) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(coeff);
  }
}

BlockMatrix MatPoly::Coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BlockMatrix(field_, rows_, cols_) : it->second;
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
  MatPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.AddTerm(e, c);
  return out;
}

bool MatPoly::operator==(const MatPoly& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && terms_ == o.terms_;
}

std::vector<Exponent> Support(const MatPoly& poly) {
  std::vector<Exponent> out;
  out.reserve(poly.terms().size());
  for (const auto& term : poly.terms()) out.push_back(term.first);
  return out;
}

namespace {

void RequirePrimitive(const MatPoly& poly, u64 m, const FieldElement& zeta) {
  if (zeta.ctx() == nullptr || !zeta.ctx()->SameAs(*poly.field())) {
    throw Error(ErrorCode::kFieldMismatch, "root of unity lies in a different field");
  }
  if (!IsPrimitiveRootOfUnity(zeta, m)) {
    throw Error(ErrorCode::kNotPrimitiveRoot,
                zeta.ToString() + " is not a primitive " + std::to_string(m) + "-th root of unity");
  }
}

}  // namespace

MatPoly ModMTransform(const MatPoly& poly, u64 m, const FieldElement& zeta) {
  RequirePrimitive(poly, m, zeta);
  MatPoly out(poly.field(), poly.rows(), poly.cols());
  for (const auto& [e, c] : poly.terms()) {
    if (e % m == m - 1) out.SetTerm(e, c);
  }
  return out;
}

MatPoly ModMTransformBySummation(const MatPoly& poly, u64 m, const FieldElement& zeta) {
  RequirePrimitive(poly, m, zeta);
  const FieldCtx& ctx = *poly.field();
  const FieldElement inv_m = ctx.FromInt(static_cast<std::int64_t>(m % ctx.characteristic())).inv();
  MatPoly out(poly.field(), poly.rows(), poly.cols());
  for (const auto& [e, c] : poly.terms()) {
    // zeta^m * (zeta^m x)^e contributes zeta^{m(e+1)} to x^e.
    const FieldElement w = Pow(zeta, static_cast<u128>(e) + 1);
    FieldElement sum = ctx.Zero();
    FieldElement wm = ctx.One();
    for (u64 j = 0; j < m; ++j) {
      sum += wm;
      wm *= w;
    }
    out.SetTerm(e, Scale(sum * inv_m, c));
  }
  return out;
}

BlockMatrix EvalSparseHorner(const MatPoly& poly, const FieldElement& x, MulCounter* counter) {
  BlockMatrix acc(poly.field(), poly.rows(), poly.cols());
  if (poly.is_zero()) return acc;
  auto it = poly.terms().rbegin();
  acc = it->second;
  Exponent upper = it->first;
  for (++it; it != poly.terms().rend(); ++it) {
    acc = Scale(Pow(x, upper - it->first, counter), acc, counter);
    acc += it->second;
    upper = it->first;
  }
  if (upper > 0) acc = Scale(Pow(x, upper, counter), acc, counter);
  return acc;
}

BlockMatrix EvalNaive(const MatPoly& poly, const FieldElement& x, MulCounter* counter) {
  BlockMatrix acc(poly.field(), poly.rows(), poly.cols());
  for (const auto& [e, c] : poly.terms()) AddScaled(acc, Pow(x, e, counter), c, counter);
  return acc;
}

MatPoly PolyMul(const MatPoly& f, const MatPoly& g, MulCounter* counter) {
  if (f.cols() != g.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "cannot multiply " + std::to_string(f.rows()) + "x" +
                                               std::to_string(f.cols()) + " by " +
                                               std::to_string(g.rows()) + "x" +
                                               std::to_string(g.cols()) + " coefficients");
  }
  if (!(f.field() == g.field())) throw Error(ErrorCode::kFieldMismatch, "polynomial fields differ");
  std::map<Exponent, BlockMatrix> acc;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      BlockMatrix prod = Mul(cf, cg, counter);
      auto [it, inserted] = acc.try_emplace(ef + eg, std::move(prod));
      if (!inserted) it->second += prod;
    }
  }
  MatPoly h(f.field(), f.rows(), g.cols());
  for (auto& [e, c] : acc) h.SetTerm(e, std::move(c));
  return h;
}

BlockMatrix EvaluationMatrix(const Field& field, std::span<const FieldElement> points,
                             std::span<const Exponent> exponents) {
  std::vector<std::size_t> order(exponents.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return exponents[a] < exponents[b]; });
  BlockMatrix out(field, points.size(), exponents.size());
  for (std::size_t n = 0; n < points.size(); ++n) {
    FieldElement cur = field->One();
    Exponent at = 0;
    for (std::size_t j : order) {
      cur *= Pow(points[n], exponents[j] - at);
      at = exponents[j];
      out.at(n, j) = cur;
    }
  }
  return out;
}

MatPoly Interpolate(std::span<const Exponent> support, std::span<const FieldElement> points,
                    std::span<const BlockMatrix> values, MulCounter* counter) {
  if (points.size() != values.size()) {
    throw Error(ErrorCode::kShapeMismatch, std::to_string(points.size()) + " points but " +
                                               std::to_string(values.size()) + " values");
  }
  if (points.size() < support.size()) {
    throw Error(ErrorCode::kSingularSystem, std::to_string(points.size()) +
                                                " evaluations cannot determine " +
                                                std::to_string(support.size()) + " coefficients");
  }
  if (values.empty()) return {};
  const Field field = values.front().field();
  const std::size_t rows = values.front().rows();
  const std::size_t cols = values.front().cols();
  MatPoly out(field, rows, cols);
  if (support.empty()) {
    for (const BlockMatrix& v : values) {
      if (!v.is_zero()) throw Error(ErrorCode::kInconsistentResponses, "non-zero value for empty support");
    }
    return out;
  }

  const BlockMatrix vander = EvaluationMatrix(field, points, support);
  BlockMatrix rhs(field, values.size(), rows * cols);
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (values[n].rows() != rows || values[n].cols() != cols) {
      throw Error(ErrorCode::kShapeMismatch, "evaluations have differing shapes");
    }
    auto src = values[n].entries();
    for (std::size_t j = 0; j < src.size(); ++j) rhs.at(n, j) = src[j];
  }
  const LinearSolution sol = SolveLinear(vander, rhs, counter);
  if (!sol.unique()) {
    std::size_t missing = 0;
    while (missing < sol.pivots.size() && sol.pivots[missing] == missing) ++missing;
    throw Error(ErrorCode::kSingularSystem,
                "generalized Vandermonde matrix has rank " + std::to_string(sol.rank) + " < " +
                    std::to_string(support.size()) + "; first dependent exponent " +
                    std::to_string(support[missing]));
  }
  if (!sol.all_consistent()) {
    throw Error(ErrorCode::kInconsistentResponses, "evaluations are not consistent with the support");
  }
  for (std::size_t j = 0; j < support.size(); ++j) {
    BlockMatrix c(field, rows, cols);
    auto dst = c.entries();
    for (std::size_t e = 0; e < dst.size(); ++e) dst[e] = sol.x.at(j, e);
    out.SetTerm(support[j], std::move(c));
  }
  return out;
}

}  // namespace mpcodes
