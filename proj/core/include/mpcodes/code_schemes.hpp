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

#ifndef MPCODES_CODE_SCHEMES_HPP_
#define MPCODES_CODE_SCHEMES_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mpcodes/block_matrix.hpp"
#include "mpcodes/matpoly.hpp"

namespace mpcodes {

// Arithmetic-progression modular polynomial code: alpha_t = beta_t = t*D.
struct MpVariant {
  u64 d = 1;
};

// Grid-partition GASP: alpha is the first T integers of the union of
// [u*KM, u*KM + r - 1], beta_t = t.
struct GgaspVariant {
  u64 r = 1;
};

// Raw degree shifts for modular polynomial codes outside the arithmetic
// progression family; only strict monotonicity is validated.
struct CustomVariant {
  std::vector<Exponent> alpha;
  std::vector<Exponent> beta;
};

enum class SchemeKind { kMp, kGgasp, kCustom };

struct SchemeParams {
  u64 k = 1;
  u64 m = 1;
  u64 l = 1;
  u64 t = 0;
  std::variant<MpVariant, GgaspVariant, CustomVariant> variant;

  static SchemeParams Mp(u64 k, u64 m, u64 l, u64 t, u64 d = 1);
  static SchemeParams Ggasp(u64 k, u64 m, u64 l, u64 t, u64 r);
  static SchemeParams Custom(u64 k, u64 m, u64 l, std::vector<Exponent> alpha,
                             std::vector<Exponent> beta);

  SchemeKind kind() const;
  // MP and custom codes are decoded through the mod-M transform.
  bool uses_mod_m() const { return kind() != SchemeKind::kGgasp; }
  u64 d() const;  // kBadParams unless MP
  u64 r() const;  // kBadParams unless GGASP
  u64 kml() const { return k * m * l; }

  std::vector<Exponent> alpha() const;
  std::vector<Exponent> beta() const;

  // Errors: kBadParams (zero partition size, non-monotone shifts),
  // kBadD, kBadR.
  void Validate() const;

  bool operator==(const SchemeParams& o) const;
};

// "mp:K=2,M=3,L=2,T=3,D=1", "ggasp:K=5,M=2,L=5,T=4,r=2",
// "custom:K=2,M=3,L=2,alpha=0;1,beta=0;2". D defaults to 1; r may be
// omitted only when T = 0. The result is validated. Errors: kParseError
// plus those of Validate.
SchemeParams ParseSchemeSpec(std::string_view spec);
// Canonical form; ParseSchemeSpec(FormatSchemeSpec(p)) == p.
std::string FormatSchemeSpec(const SchemeParams& params);

// First T elements of the union over u >= 0 of [u*KM : u*KM + r - 1].
// Errors: kBadR unless 1 <= r <= min(KM, T) (any r is accepted for T = 0).
std::vector<Exponent> GgaspAlpha(u64 k, u64 m, u64 t, u64 r);

// A split into a K x M grid of a x s blocks and B into an M x L grid of
// s x b blocks.
struct PartitionedInput {
  u64 k = 0;
  u64 m = 0;
  u64 l = 0;
  std::vector<BlockMatrix> a_blocks;  // index k*M + m
  std::vector<BlockMatrix> b_blocks;  // index m*L + l

  const BlockMatrix& A(u64 row, u64 col) const { return a_blocks[row * m + col]; }
  const BlockMatrix& B(u64 row, u64 col) const { return b_blocks[row * l + col]; }

  static PartitionedInput Random(const Field& field, u64 k, u64 m, u64 l, std::size_t a_rows,
                                 std::size_t inner, std::size_t b_cols, Rng& rng);
  // Blocks of the unpartitioned matrices; dimensions must divide evenly.
  static PartitionedInput FromMatrices(const BlockMatrix& a, const BlockMatrix& b, u64 k, u64 m,
                                       u64 l);

  // sum_m A_{k,m} B_{m,l}, computed directly.
  BlockMatrix ProductBlock(u64 row, u64 col, MulCounter* counter = nullptr) const;

  // Errors: kShapeMismatch.
  void Validate() const;
};

// f = sum A_{k,m} x^{m + kM} + sum_t R_t x^{KML + alpha_t}.
// Errors: kShapeMismatch, kBadParams (wrong number of masks).
MatPoly BuildF(const PartitionedInput& input, const SchemeParams& params,
               std::span<const BlockMatrix> masks);
// g = sum B_{m,l} x^{M - 1 - m + lKM} + sum_t S_t x^{KML + beta_t}.
MatPoly BuildG(const PartitionedInput& input, const SchemeParams& params,
               std::span<const BlockMatrix> masks);

// T uniformly random masks shaped like the A blocks (resp. B blocks).
std::vector<BlockMatrix> DrawMasksA(const PartitionedInput& input, u64 t, Rng& rng);
std::vector<BlockMatrix> DrawMasksB(const PartitionedInput& input, u64 t, Rng& rng);

// (k, l) -> M - 1 + kM + lKM: where A_k B_l sits in h = fg.
std::map<std::pair<u64, u64>, Exponent> ProductBlockPositions(const SchemeParams& params);

}  // namespace mpcodes

#endif  // MPCODES_CODE_SCHEMES_HPP_
