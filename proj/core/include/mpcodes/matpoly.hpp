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

#ifndef MPCODES_MATPOLY_HPP_
#define MPCODES_MATPOLY_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "mpcodes/block_matrix.hpp"

namespace mpcodes {

using Exponent = u64;

// Sparse univariate polynomial whose coefficients are rows x cols matrices
// over one field. Zero coefficients are never stored, so the key set is the
// support.
class MatPoly {
 public:
  MatPoly() = default;
  MatPoly(Field field, std::size_t rows, std::size_t cols);

  // Scalar (1x1) polynomial from exponent -> value.
  static MatPoly FromScalars(Field field, const std::map<Exponent, FieldElement>& coeffs);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Exponent, BlockMatrix>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Largest exponent in the support; 0 for the zero polynomial.
  Exponent degree() const;

  // Accumulates into the coefficient of x^e, pruning if it cancels.
  void AddTerm(Exponent e, const BlockMatrix& coeff);
  // Replaces the coefficient of x^e (erasing it if zero).
  void SetTerm(Exponent e, BlockMatrix coeff);
  // Zero matrix when e is not in the support.
  BlockMatrix Coeff(Exponent e) const;

  MatPoly operator+(const MatPoly& o) const;
  bool operator==(const MatPoly& o) const;
  bool operator!=(const MatPoly& o) const { return !(*this == o); }

 private:
  void CheckShape(const BlockMatrix& m) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Exponent, BlockMatrix> terms_;
};

std::vector<Exponent> Support(const MatPoly& poly);

// Mod-M transform (1/M) sum_m zeta^m poly(zeta^m x): keeps the coefficients
// whose exponent is congruent to M-1 mod M. Errors: kNotPrimitiveRoot.
MatPoly ModMTransform(const MatPoly& poly, u64 m, const FieldElement& zeta);

// Same transform computed literally from the defining sum, coefficient by
// coefficient (x^i picks up (1/M) sum_m zeta^{m(i+1)}). Cross-check oracle.
MatPoly ModMTransformBySummation(const MatPoly& poly, u64 m, const FieldElement& zeta);

// Factored sparse Horner form
//   h(x) = x^{d_1}(c_1 + x^{d_2}(c_2 + ... + x^{d_N} c_N))
// with each gap power by square-and-multiply. Scalar multiplication count is
// (N - 1) + sum PowCost(d_n) for a scalar polynomial whose lowest exponent is
// zero, plus one when it is positive; matrix coefficients multiply the
// non-power part by rows*cols.
BlockMatrix EvalSparseHorner(const MatPoly& poly, const FieldElement& x,
                             MulCounter* counter = nullptr);

// Term-by-term evaluation with an independent x^e per term.
BlockMatrix EvalNaive(const MatPoly& poly, const FieldElement& x, MulCounter* counter = nullptr);

// Convolution product. Errors: kShapeMismatch, kFieldMismatch.
MatPoly PolyMul(const MatPoly& f, const MatPoly& g, MulCounter* counter = nullptr);

// Row n is (points[n]^e for e in exponents).
BlockMatrix EvaluationMatrix(const Field& field, std::span<const FieldElement> points,
                             std::span<const Exponent> exponents);

// Polynomial supported on `support` matching values[n] at points[n]. More
// points than exponents are allowed if the values are consistent.
// Errors: kShapeMismatch, kSingularSystem (rank deficient),
// kInconsistentResponses (overdetermined and contradictory).
MatPoly Interpolate(std::span<const Exponent> support, std::span<const FieldElement> points,
                    std::span<const BlockMatrix> values, MulCounter* counter = nullptr);

}  // namespace mpcodes

#endif  // MPCODES_MATPOLY_HPP_
