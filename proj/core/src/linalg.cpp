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

#include "mpcodes/linalg.hpp"

#include <algorithm>

#include "mpcodes/error.hpp"

namespace mpcodes {

FieldElement Determinant(BlockMatrix m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  FieldElement det = m.field()->One();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return m.field()->Zero();
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    const FieldElement inv = m.at(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const FieldElement factor = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

std::size_t Rank(BlockMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const FieldElement inv = m.at(rank, col).inv();
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      const FieldElement factor = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool LinearSolution::all_consistent() const {
  return std::all_of(consistent.begin(), consistent.end(), [](bool c) { return c; });
}

LinearSolution SolveLinear(const BlockMatrix& a, const BlockMatrix& b, MulCounter* counter) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "system has " + std::to_string(a.rows()) +
                                               " equations but " + std::to_string(b.rows()) +
                                               " right-hand-side rows");
  }
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  const std::size_t c = b.cols();
  const Field& field = a.field();

  // Augmented [A | B], reduced to row echelon form with unit pivots.
  BlockMatrix aug(field, n, k + c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < c; ++j) aug.at(i, k + j) = b.at(i, j);
  }

  LinearSolution out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && aug.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < k + c; ++j) std::swap(aug.at(pivot, j), aug.at(row, j));
    }
    const FieldElement inv = aug.at(row, col).inv();
    for (std::size_t j = col; j < k + c; ++j) aug.at(row, j) *= inv;
    Tick(counter, k + c - col);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug.at(i, col).is_zero()) continue;
      const FieldElement factor = aug.at(i, col);
      for (std::size_t j = col; j < k + c; ++j) aug.at(i, j) -= factor * aug.at(row, j);
      Tick(counter, k + c - col);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;

  out.x = BlockMatrix(field, k, c);
  out.consistent.assign(c, true);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = out.rank; i < n; ++i) {
      if (!aug.at(i, k + j).is_zero()) {
        out.consistent[j] = false;
        break;
      }
    }
    if (!out.consistent[j]) continue;
    for (std::size_t r = 0; r < out.rank; ++r) out.x.at(out.pivots[r], j) = aug.at(r, k + j);
  }
  return out;
}

}  // namespace mpcodes
