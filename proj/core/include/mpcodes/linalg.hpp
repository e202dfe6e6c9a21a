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

#ifndef MPCODES_LINALG_HPP_
#define MPCODES_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "mpcodes/block_matrix.hpp"

namespace mpcodes {

// Exact Gaussian elimination over the field of the matrix.

FieldElement Determinant(BlockMatrix m);
std::size_t Rank(BlockMatrix m);

struct LinearSolution {
  std::size_t rank = 0;
  // One particular solution per right-hand-side column (free variables set
  // to zero); columns that are inconsistent are left zero.
  BlockMatrix x;
  std::vector<bool> consistent;
  // Pivot column of each pivot row, ascending; length = rank.
  std::vector<std::size_t> pivots;

  bool unique() const { return rank == x.rows(); }
  bool all_consistent() const;
};

// Solves A X = B for any shape. Errors: kShapeMismatch if A and B have
// different row counts.
LinearSolution SolveLinear(const BlockMatrix& a, const BlockMatrix& b,
                           MulCounter* counter = nullptr);

}  // namespace mpcodes

#endif  // MPCODES_LINALG_HPP_
