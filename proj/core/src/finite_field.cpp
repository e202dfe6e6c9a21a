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

#include "mpcodes/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "mpcodes/error.hpp"

namespace mpcodes {

namespace {

using Poly = std::vector<u64>;  // little-endian coefficients over GF(p)

u64 AddMod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 SubMod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 MulMod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 InvMod(u64 a, u64 p) {
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    const __int128 tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly PolyMod(Poly a, const Poly& f, u64 p) {
  Trim(a);
  const std::size_t n = f.size() - 1;
  const u64 lead_inv = InvMod(f.back(), p);
  while (a.size() > n) {
    const u64 t = MulMod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j <= n; ++j) {
      a[shift + j] = SubMod(a[shift + j], MulMod(t, f[j], p), p);
    }
    Trim(a);
  }
  return a;
}

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = AddMod(out[i + j], MulMod(a[i], b[j], p), p);
    }
  }
  return PolyMod(std::move(out), f, p);
}

Poly PolyPowMod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result{1};
  base = PolyMod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = PolyMulMod(result, base, f, p);
    base = PolyMulMod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly PolyGcd(Poly a, Poly b, u64 p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = PolyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f.
Poly FrobeniusPower(const Poly& f, u64 p, int k) {
  Poly h{0, 1};
  for (int i = 0; i < k; ++i) h = PolyPowMod(h, p, f, p);
  return PolyMod(h, f, p);
}

u128 CheckedOrder(u64 p, int r) {
  u128 order = 1;
  for (int i = 0; i < r; ++i) {
    if (order > (u128{1} << 126) / p) {
      throw Error(ErrorCode::kFieldTooLarge, "p^r exceeds 2^126");
    }
    order *= p;
  }
  return order;
}

void ValidatePrimeAndDegree(u64 p, int r) {
  if (r < 1) throw Error(ErrorCode::kDegreeZero, "extension degree must be >= 1");
  if (p >= kPrimeLimit) {
    throw Error(ErrorCode::kFieldTooLarge, "characteristic must be below 2^61");
  }
  if (!IsPrime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (r > kMaxExtensionDegree) {
    throw Error(ErrorCode::kFieldTooLarge,
                "extension degree above " + std::to_string(kMaxExtensionDegree));
  }
  CheckedOrder(p, r);
}

u64 ParseU64(std::string_view text, std::string_view what) {
  u64 v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorCode::kParseError,
                "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<u64> ParseCsvU64(std::string_view text, std::string_view what) {
  std::vector<u64> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(ParseU64(text.substr(start, end - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

int FieldElement::degree() const { return ctx_ ? ctx_->degree() : 0; }

std::span<const u64> FieldElement::coeffs() const {
  return {c_.data(), static_cast<std::size_t>(degree())};
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < degree(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const {
  if (degree() == 0 || c_[0] != 1) return false;
  for (int i = 1; i < degree(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

namespace {

const FieldCtx& CommonCtx(const FieldElement& a, const FieldElement& b) {
  if (a.ctx() == nullptr || b.ctx() == nullptr) {
    throw Error(ErrorCode::kFieldMismatch, "operation on a detached element");
  }
  if (a.ctx() != b.ctx() && !a.ctx()->SameAs(*b.ctx())) {
    throw Error(ErrorCode::kFieldMismatch, "elements belong to different fields");
  }
  return *a.ctx();
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldCtx& ctx = CommonCtx(*this, o);
  FieldElement out;
  out.ctx_ = ctx_;
  ctx.Add(c_.data(), o.c_.data(), out.c_.data());
  return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const FieldCtx& ctx = CommonCtx(*this, o);
  FieldElement out;
  out.ctx_ = ctx_;
  ctx.Sub(c_.data(), o.c_.data(), out.c_.data());
  return out;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldCtx& ctx = CommonCtx(*this, o);
  FieldElement out;
  out.ctx_ = ctx_;
  ctx.Mul(c_.data(), o.c_.data(), out.c_.data());
  return out;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::operator-() const {
  if (ctx_ == nullptr) throw Error(ErrorCode::kFieldMismatch, "operation on a detached element");
  return ctx_->Zero() - *this;
}

FieldElement FieldElement::inv() const {
  if (ctx_ == nullptr) throw Error(ErrorCode::kFieldMismatch, "operation on a detached element");
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (ctx_->degree() == 1) {
    FieldElement out;
    out.ctx_ = ctx_;
    out.c_[0] = InvMod(c_[0], ctx_->characteristic());
    return out;
  }
  return Pow(*this, ctx_->order() - 2);
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (ctx_ == nullptr || o.ctx_ == nullptr) return ctx_ == o.ctx_;
  if (ctx_ != o.ctx_ && !ctx_->SameAs(*o.ctx_)) return false;
  for (int i = 0; i < degree(); ++i) {
    if (c_[i] != o.c_[i]) return false;
  }
  return true;
}

std::string FieldElement::ToString() const {
  std::string s;
  for (int i = 0; i < degree(); ++i) {
    if (i > 0) s.push_back(',');
    s += std::to_string(c_[i]);
  }
  return s;
}

u64 PowCost(u128 exponent) {
  if (exponent <= 1) return 0;
  int bits = 0;
  int ones = 0;
  for (u128 e = exponent; e != 0; e >>= 1) {
    ++bits;
    ones += static_cast<int>(e & 1);
  }
  return static_cast<u64>(bits - 1) + static_cast<u64>(ones - 1);
}

FieldElement Pow(const FieldElement& base, u128 exponent, MulCounter* counter) {
  if (base.ctx() == nullptr) {
    throw Error(ErrorCode::kFieldMismatch, "operation on a detached element");
  }
  if (exponent == 0) return base.ctx()->One();
  int top = 127;
  while (((exponent >> top) & 1) == 0) --top;
  FieldElement result = base;
  for (int bit = top - 1; bit >= 0; --bit) {
    result = result * result;
    Tick(counter);
    if ((exponent >> bit) & 1) {
      result = result * base;
      Tick(counter);
    }
  }
  return result;
}

bool CanonicalLess(const FieldElement& a, const FieldElement& b) {
  for (int i = a.degree() - 1; i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(u64 p, std::vector<u64> modulus)
    : p_(p),
      r_(static_cast<int>(modulus.size()) - 1),
      modulus_(std::move(modulus)),
      order_(CheckedOrder(p, static_cast<int>(modulus_.size()) - 1)) {}

std::string FieldCtx::Spec() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(r_) + "/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i > 0) s.push_back(',');
    s += std::to_string(modulus_[i]);
  }
  return s;
}

FieldElement FieldCtx::Zero() const {
  FieldElement e;
  e.ctx_ = this;
  return e;
}

FieldElement FieldCtx::One() const {
  FieldElement e = Zero();
  e.c_[0] = 1 % p_;
  return e;
}

FieldElement FieldCtx::FromInt(std::int64_t v) const {
  FieldElement e = Zero();
  const __int128 m = static_cast<__int128>(v) % static_cast<__int128>(p_);
  e.c_[0] = static_cast<u64>(m < 0 ? m + p_ : m);
  return e;
}

FieldElement FieldCtx::FromCoeffs(std::span<const u64> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(r_)) {
    throw Error(ErrorCode::kParseError, "too many coefficients for field " + Spec());
  }
  FieldElement e = Zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = coeffs[i] % p_;
  return e;
}

FieldElement FieldCtx::ElementAt(u128 index) const {
  FieldElement e = Zero();
  for (int i = 0; i < r_; ++i) {
    e.c_[i] = static_cast<u64>(index % p_);
    index /= p_;
  }
  return e;
}

u128 FieldCtx::IndexOf(const FieldElement& e) const {
  u128 index = 0;
  for (int i = r_ - 1; i >= 0; --i) index = index * p_ + e.coeff(i);
  return index;
}

FieldElement FieldCtx::Random(Rng& rng) const {
  FieldElement e = Zero();
  for (int i = 0; i < r_; ++i) e.c_[i] = UniformBelow(rng, p_);
  return e;
}

FieldElement FieldCtx::RandomNonzero(Rng& rng) const {
  for (;;) {
    FieldElement e = Random(rng);
    if (!e.is_zero()) return e;
  }
}

bool FieldCtx::SameAs(const FieldCtx& other) const {
  return p_ == other.p_ && modulus_ == other.modulus_;
}

void FieldCtx::Add(const u64* a, const u64* b, u64* out) const {
  for (int i = 0; i < r_; ++i) out[i] = AddMod(a[i], b[i], p_);
}

void FieldCtx::Sub(const u64* a, const u64* b, u64* out) const {
  for (int i = 0; i < r_; ++i) out[i] = SubMod(a[i], b[i], p_);
}

void FieldCtx::Mul(const u64* a, const u64* b, u64* out) const {
  if (r_ == 1) {
    out[0] = MulMod(a[0], b[0], p_);
    return;
  }
  // Schoolbook product then reduction by the monic modulus. Each partial
  // sum holds at most r < 2^3 products below 2^122, so u128 cannot overflow.
  std::array<u128, 2 * kMaxExtensionDegree> acc{};
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < r_; ++j) acc[i + j] += static_cast<u128>(a[i]) * b[j];
  }
  std::array<u64, 2 * kMaxExtensionDegree> prod{};
  for (int k = 0; k < 2 * r_ - 1; ++k) prod[k] = static_cast<u64>(acc[k] % p_);
  for (int k = 2 * r_ - 2; k >= r_; --k) {
    const u64 t = prod[k];
    if (t == 0) continue;
    for (int j = 0; j < r_; ++j) {
      prod[k - r_ + j] = SubMod(prod[k - r_ + j], MulMod(t, modulus_[j], p_), p_);
    }
    prod[k] = 0;
  }
  for (int i = 0; i < r_; ++i) out[i] = prod[i];
}

// ---------------------------------------------------------------------------
// Construction

bool IsIrreducible(u64 p, const std::vector<u64>& monic) {
  const int r = static_cast<int>(monic.size()) - 1;
  if (r < 1 || monic.back() != 1) return false;
  if (r == 1) return true;
  const Poly& f = monic;
  // Rabin: x^(p^r) = x mod f and gcd(x^(p^(r/q)) - x, f) = 1 for primes q | r.
  const Poly x = PolyMod(Poly{0, 1}, f, p);
  if (FrobeniusPower(f, p, r) != x) return false;
  for (u64 q : PrimeFactors(static_cast<u64>(r))) {
    Poly h = FrobeniusPower(f, p, r / static_cast<int>(q));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = SubMod(h[1], 1, p);
    Trim(h);
    Poly g = PolyGcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field MakeField(u64 p, int r, u64 seed) {
  ValidatePrimeAndDegree(p, r);
  if (r == 1) return Field(std::make_shared<const FieldCtx>(p, std::vector<u64>{0, 1}));
  Rng rng(seed ^ (p * 0x9e3779b97f4a7c15ULL) ^ static_cast<u64>(r));
  for (;;) {
    std::vector<u64> candidate(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i < r; ++i) candidate[i] = UniformBelow(rng, p);
    candidate[r] = 1;
    if (candidate[0] == 0) continue;
    if (IsIrreducible(p, candidate)) {
      return Field(std::make_shared<const FieldCtx>(p, std::move(candidate)));
    }
  }
}

Field MakeFieldWithModulus(u64 p, const std::vector<u64>& modulus) {
  const int r = static_cast<int>(modulus.size()) - 1;
  ValidatePrimeAndDegree(p, r);
  std::vector<u64> reduced = modulus;
  for (u64& c : reduced) c %= p;
  if (reduced.back() != 1) {
    throw Error(ErrorCode::kNotIrreducible, "modulus must be monic");
  }
  if (!IsIrreducible(p, reduced)) {
    throw Error(ErrorCode::kNotIrreducible, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  return Field(std::make_shared<const FieldCtx>(p, std::move(reduced)));
}

Field ParseFieldSpec(std::string_view spec) {
  const std::size_t slash = spec.find('/');
  const std::string_view head = spec.substr(0, slash);
  const std::size_t caret = head.find('^');
  const u64 p = ParseU64(head.substr(0, caret), "field characteristic");
  int r = 1;
  if (caret != std::string_view::npos) {
    r = static_cast<int>(ParseU64(head.substr(caret + 1), "extension degree"));
  }
  if (slash == std::string_view::npos) return MakeField(p, r);
  std::vector<u64> modulus = ParseCsvU64(spec.substr(slash + 1), "modulus coefficient");
  if (static_cast<int>(modulus.size()) != r + 1) {
    throw Error(ErrorCode::kParseError, "modulus needs r+1 coefficients in '" + std::string(spec) + "'");
  }
  return MakeFieldWithModulus(p, modulus);
}

FieldElement ParseElement(const Field& field, std::string_view text) {
  const std::vector<u64> coeffs = ParseCsvU64(text, "field element");
  for (u64 c : coeffs) {
    if (c >= field->characteristic()) {
      throw Error(ErrorCode::kParseError, "coefficient out of range in '" + std::string(text) + "'");
    }
  }
  return field->FromCoeffs(coeffs);
}

// ---------------------------------------------------------------------------
// Roots of unity and subgroups

bool IsPrimitiveRootOfUnity(const FieldElement& zeta, u64 m) {
  if (m == 0 || zeta.ctx() == nullptr) return false;
  if (!Pow(zeta, m).is_one()) return false;
  for (u64 q : PrimeFactors(m)) {
    if (Pow(zeta, m / q).is_one()) return false;
  }
  return true;
}

namespace {

// Smallest element of exact multiplicative order n; the caller has checked
// that n divides |K^x|.
FieldElement SmallestOfExactOrder(const FieldCtx& ctx, u64 n) {
  if (n == 1) return ctx.One();
  const u128 cofactor = (ctx.order() - 1) / n;
  FieldElement first;
  for (u128 index = 2; index < ctx.order(); ++index) {
    const FieldElement candidate = Pow(ctx.ElementAt(index), cofactor);
    if (IsPrimitiveRootOfUnity(candidate, n)) {
      first = candidate;
      break;
    }
  }
  // Every element of exact order n is a power first^k with gcd(k, n) = 1.
  FieldElement best = first;
  FieldElement power = first;
  for (u64 k = 2; k < n; ++k) {
    power = power * first;
    if (Gcd(k, n) == 1 && CanonicalLess(power, best)) best = power;
  }
  return best;
}

}  // namespace

FieldElement PrimitiveRootOfUnity(const Field& field, u64 m) {
  if (m == 0 || (field->order() - 1) % m != 0) {
    throw Error(ErrorCode::kNoSuchRoot, "M = " + std::to_string(m) +
                                            " does not divide |K^x| in " + field->Spec());
  }
  return SmallestOfExactOrder(*field, m);
}

FieldElement SubgroupGenerator(const Field& field, u64 order) {
  if (order == 0 || (field->order() - 1) % order != 0) {
    throw Error(ErrorCode::kNoSuchSubgroup, "order " + std::to_string(order) +
                                                " does not divide |K^x| in " + field->Spec());
  }
  return SmallestOfExactOrder(*field, order);
}

std::vector<FieldElement> SubgroupElements(const Field& field, u64 order) {
  const FieldElement g = SubgroupGenerator(field, order);
  std::vector<FieldElement> out;
  out.reserve(order);
  FieldElement x = field->One();
  for (u64 i = 0; i < order; ++i) {
    out.push_back(x);
    x = x * g;
  }
  return out;
}

}  // namespace mpcodes
