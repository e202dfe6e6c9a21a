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

#ifndef MPCODES_NUMTHEORY_HPP_
#define MPCODES_NUMTHEORY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace mpcodes {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Seedable PRNG used everywhere randomness is drawn (inputs, masks,
// candidate evaluation vectors, straggler sets).
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection; portable across standard
// libraries, unlike std::uniform_int_distribution.
u64 UniformBelow(Rng& rng, u64 bound);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool IsPrime(u64 n);

u64 Gcd(u64 a, u64 b);
u128 Gcd128(u128 a, u128 b);

// Distinct prime factors in increasing order (trial division).
std::vector<u64> PrimeFactors(u64 n);

// Largest divisor of n coprime to m.
u128 CoprimePart(u128 n, u64 m);

// Exact binomial coefficient; throws kOutOfRange on u128 overflow.
u128 Binomial(u64 n, u64 k);

std::string U128ToString(u128 v);

// Non-negative exact rational with u128 numerator/denominator, kept in
// lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(u128 num, u128 den);

  u128 num() const { return num_; }
  u128 den() const { return den_; }
  double ToDouble() const;
  std::string ToString() const;  // "n/d", or "n" when d == 1

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  u128 num_ = 0;
  u128 den_ = 1;
};

// Calls fn(indices) for every k-subset of [0, n) in lexicographic order
// until fn returns false. Returns false iff stopped early.
template <class Fn>
bool ForEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Uniform k-subset of [0, n), sorted.
std::vector<std::size_t> RandomSubset(std::size_t n, std::size_t k, Rng& rng);

// 64-bit FNV-1a; used for stable config and product hashes.
u64 Fnv1a64(const std::string& data);

}  // namespace mpcodes

#endif  // MPCODES_NUMTHEORY_HPP_
