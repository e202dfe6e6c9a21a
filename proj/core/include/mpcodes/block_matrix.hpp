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

#ifndef MPCODES_BLOCK_MATRIX_HPP_
#define MPCODES_BLOCK_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mpcodes/finite_field.hpp"

namespace mpcodes {

// Dense row-major matrix over a finite field. Used both for the coefficient
// blocks of matrix polynomials and for the coding-theoretic matrices
// (generalized Vandermonde, security matrices).
class BlockMatrix {
 public:
  BlockMatrix() = default;
  // Zero matrix.
  BlockMatrix(Field field, std::size_t rows, std::size_t cols);

  static BlockMatrix Identity(Field field, std::size_t n);
  static BlockMatrix Random(Field field, std::size_t rows, std::size_t cols, Rng& rng);
  // 1x1 matrix holding `value`.
  static BlockMatrix Scalar(const FieldElement& value, Field field);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const FieldElement> entries() const { return entries_; }
  std::span<FieldElement> entries() { return entries_; }

  bool is_zero() const;
  bool SameShape(const BlockMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  BlockMatrix operator+(const BlockMatrix& o) const;
  BlockMatrix operator-(const BlockMatrix& o) const;
  BlockMatrix& operator+=(const BlockMatrix& o);
  bool operator==(const BlockMatrix& o) const;
  bool operator!=(const BlockMatrix& o) const { return !(*this == o); }

  BlockMatrix Transposed() const;
  // Columns listed in `cols`, in that order.
  BlockMatrix SelectColumns(std::span<const std::size_t> cols) const;
  BlockMatrix SelectRows(std::span<const std::size_t> rows) const;

  // Rows separated by ';', entries by ' ', extension coefficients by ','.
  std::string ToString() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

// Matrix product; one counter tick per scalar multiplication.
// Errors: kShapeMismatch, kFieldMismatch.
BlockMatrix Mul(const BlockMatrix& a, const BlockMatrix& b, MulCounter* counter = nullptr);

BlockMatrix Scale(const FieldElement& s, const BlockMatrix& m, MulCounter* counter = nullptr);

// out += s * m, without a temporary.
void AddScaled(BlockMatrix& out, const FieldElement& s, const BlockMatrix& m,
               MulCounter* counter = nullptr);

}  // namespace mpcodes

#endif  // MPCODES_BLOCK_MATRIX_HPP_
