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

#ifndef MPCODES_FINITE_FIELD_HPP_
#define MPCODES_FINITE_FIELD_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpcodes/numtheory.hpp"

namespace mpcodes {

inline constexpr int kMaxExtensionDegree = 8;
// Characteristic must be below 2^61 so products fit in 128-bit intermediates.
inline constexpr u64 kPrimeLimit = u64{1} << 61;
inline constexpr u64 kDefaultFieldSeed = 0x6d70636f646573ULL;

// Opt-in multiplication counter. Operations that accept a `MulCounter*`
// record one tick per multiplication in the field; nullptr disables counting.
struct MulCounter {
  u64 count = 0;
};

inline void Tick(MulCounter* counter, u64 n = 1) {
  if (counter != nullptr) counter->count += n;
}

class FieldCtx;

// Element of GF(p^r): r little-endian coefficients in [0, p) in the
// generator of the extension. Holds a non-owning pointer to its context;
// the owning `Field` handle must outlive it.
class FieldElement {
 public:
  FieldElement() = default;

  const FieldCtx* ctx() const { return ctx_; }
  int degree() const;
  u64 coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::span<const u64> coeffs() const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // Throws kDivisionByZero on zero.
  FieldElement inv() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // "c0" for prime fields, "c0,c1,...,c_{r-1}" otherwise.
  std::string ToString() const;

 private:
  friend class FieldCtx;
  const FieldCtx* ctx_ = nullptr;
  std::array<u64, kMaxExtensionDegree> c_{};
};

// Square-and-multiply; ticks the counter once per squaring or multiply.
FieldElement Pow(const FieldElement& base, u128 exponent, MulCounter* counter = nullptr);

// Number of multiplications Pow performs for `exponent`.
u64 PowCost(u128 exponent);

// Total order on elements: compares the coefficient tuple from the highest
// coefficient down, i.e. the base-p integer sum c_i p^i.
bool CanonicalLess(const FieldElement& a, const FieldElement& b);

class FieldCtx {
 public:
  // `modulus` is monic of degree r (r + 1 little-endian coefficients). No
  // validation here; use MakeField.
  FieldCtx(u64 p, std::vector<u64> modulus);

  u64 characteristic() const { return p_; }
  int degree() const { return r_; }
  u128 order() const { return order_; }
  const std::vector<u64>& modulus() const { return modulus_; }

  // "p^r/c0,...,cr"; parses back to an identical field.
  std::string Spec() const;

  FieldElement Zero() const;
  FieldElement One() const;
  FieldElement FromInt(std::int64_t v) const;
  FieldElement FromCoeffs(std::span<const u64> coeffs) const;
  // Canonical enumeration: base-p digits of `index`, little-endian.
  FieldElement ElementAt(u128 index) const;
  u128 IndexOf(const FieldElement& e) const;

  FieldElement Random(Rng& rng) const;
  FieldElement RandomNonzero(Rng& rng) const;

  bool SameAs(const FieldCtx& other) const;

  // Raw kernels used by FieldElement.
  void Add(const u64* a, const u64* b, u64* out) const;
  void Sub(const u64* a, const u64* b, u64* out) const;
  void Mul(const u64* a, const u64* b, u64* out) const;

 private:
  u64 p_;
  int r_;
  std::vector<u64> modulus_;
  u128 order_;
};

// Shared, immutable handle to a field context.
class Field {
 public:
  Field() = default;
  explicit Field(std::shared_ptr<const FieldCtx> ctx) : ctx_(std::move(ctx)) {}

  const FieldCtx& operator*() const { return *ctx_; }
  const FieldCtx* operator->() const { return ctx_.get(); }
  const FieldCtx* get() const { return ctx_.get(); }
  explicit operator bool() const { return ctx_ != nullptr; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.ctx_ == b.ctx_ || (a.ctx_ && b.ctx_ && a.ctx_->SameAs(*b.ctx_));
  }

 private:
  std::shared_ptr<const FieldCtx> ctx_;
};

// GF(p^r) with an irreducible modulus found by seeded random search.
// Errors: kNotPrime, kDegreeZero, kFieldTooLarge.
Field MakeField(u64 p, int r, u64 seed = kDefaultFieldSeed);

// GF(p^r) with an explicit monic modulus (r + 1 little-endian coefficients).
// Errors: kNotPrime, kDegreeZero, kNotIrreducible, kFieldTooLarge.
Field MakeFieldWithModulus(u64 p, const std::vector<u64>& modulus);

// Accepts "p", "p^r", or "p^r/c0,c1,...,cr".
Field ParseFieldSpec(std::string_view spec);

// Parses "c0" or "c0,c1,..." (fewer than r coefficients are zero-padded).
FieldElement ParseElement(const Field& field, std::string_view text);

bool IsIrreducible(u64 p, const std::vector<u64>& monic);

// Smallest (canonical order) primitive M-th root of unity. kNoSuchRoot if
// M does not divide p^r - 1.
FieldElement PrimitiveRootOfUnity(const Field& field, u64 m);

bool IsPrimitiveRootOfUnity(const FieldElement& zeta, u64 m);

// Smallest generator of the cyclic subgroup of the given order, and the
// subgroup itself as g^0, g^1, ..., g^{order-1}. kNoSuchSubgroup if order
// does not divide p^r - 1.
FieldElement SubgroupGenerator(const Field& field, u64 order);
std::vector<FieldElement> SubgroupElements(const Field& field, u64 order);

}  // namespace mpcodes

#endif  // MPCODES_FINITE_FIELD_HPP_
