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

#include "mpcodes/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mpcodes/error.hpp"

namespace mpcodes {

u64 UniformBelow(Rng& rng, u64 bound) {
  if (bound == 0) throw Error(ErrorCode::kOutOfRange, "UniformBelow(0)");
  const u64 limit = std::numeric_limits<u64>::max() -
                    std::numeric_limits<u64>::max() % bound;
  for (;;) {
    const u64 x = rng();
    if (x < limit) return x % bound;
  }
}

namespace {

u64 MulMod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 PowMod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool IsPrime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 Gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 Gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<u64> PrimeFactors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u128 CoprimePart(u128 n, u64 m) {
  if (n == 0) return 0;
  u128 g = Gcd128(n, m);
  while (g > 1) {
    n /= g;
    g = Gcd128(n, m);
  }
  return n;
}

u128 Binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (u64 i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const u128 factor = n - k + i;
    const u128 g = Gcd128(result, i);
    const u128 reduced = result / g;
    const u128 divisor = i / g;
    if (factor % divisor != 0) {
      // divisor divides reduced * factor; since gcd(reduced, divisor) = 1
      // it must divide factor.
      throw Error(ErrorCode::kOutOfRange, "binomial arithmetic invariant");
    }
    const u128 f = factor / divisor;
    if (f != 0 && reduced > (~u128{0}) / f) {
      throw Error(ErrorCode::kOutOfRange, "binomial overflows 128 bits");
    }
    result = reduced * f;
  }
  return result;
}

std::string U128ToString(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Rational::Rational(u128 num, u128 den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  const u128 g = Gcd128(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
  if (num_ == 0) den_ = 1;
}

double Rational::ToDouble() const {
  return static_cast<double>(static_cast<long double>(num_) /
                             static_cast<long double>(den_));
}

std::string Rational::ToString() const {
  if (den_ == 1) return U128ToString(num_);
  return U128ToString(num_) + "/" + U128ToString(den_);
}

bool operator<(const Rational& a, const Rational& b) {
  // Cross-multiplication can overflow for huge operands; fall back to
  // long double only in that case.
  const u128 max = ~u128{0};
  if ((b.den_ == 0 || a.num_ <= max / b.den_) &&
      (a.den_ == 0 || b.num_ <= max / a.den_)) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  return static_cast<long double>(a.num_) / static_cast<long double>(a.den_) <
         static_cast<long double>(b.num_) / static_cast<long double>(b.den_);
}

std::vector<std::size_t> RandomSubset(std::size_t n, std::size_t k, Rng& rng) {
  // Partial Fisher-Yates.
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(UniformBelow(rng, n - i));
    std::swap(all[i], all[j]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

u64 Fnv1a64(const std::string& data) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mpcodes
