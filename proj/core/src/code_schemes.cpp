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

#include "mpcodes/code_schemes.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "mpcodes/error.hpp"

namespace mpcodes {

SchemeParams SchemeParams::Mp(u64 k, u64 m, u64 l, u64 t, u64 d) {
  return SchemeParams{k, m, l, t, MpVariant{d}};
}

SchemeParams SchemeParams::Ggasp(u64 k, u64 m, u64 l, u64 t, u64 r) {
  return SchemeParams{k, m, l, t, GgaspVariant{r}};
}

SchemeParams SchemeParams::Custom(u64 k, u64 m, u64 l, std::vector<Exponent> alpha,
                                  std::vector<Exponent> beta) {
  const u64 t = alpha.size();
  return SchemeParams{k, m, l, t, CustomVariant{std::move(alpha), std::move(beta)}};
}

SchemeKind SchemeParams::kind() const { return static_cast<SchemeKind>(variant.index()); }

u64 SchemeParams::d() const {
  if (const auto* mp = std::get_if<MpVariant>(&variant)) return mp->d;
  throw Error(ErrorCode::kBadParams, "D is defined only for MP codes");
}

u64 SchemeParams::r() const {
  if (const auto* gg = std::get_if<GgaspVariant>(&variant)) return gg->r;
  throw Error(ErrorCode::kBadParams, "r is defined only for GGASP codes");
}

std::vector<Exponent> SchemeParams::alpha() const {
  switch (kind()) {
    case SchemeKind::kMp: {
      std::vector<Exponent> out(t);
      for (u64 i = 0; i < t; ++i) out[i] = i * d();
      return out;
    }
    case SchemeKind::kGgasp:
      return GgaspAlpha(k, m, t, r());
    case SchemeKind::kCustom:
      return std::get<CustomVariant>(variant).alpha;
  }
  return {};
}

std::vector<Exponent> SchemeParams::beta() const {
  switch (kind()) {
    case SchemeKind::kMp:
      return alpha();
    case SchemeKind::kGgasp: {
      std::vector<Exponent> out(t);
      for (u64 i = 0; i < t; ++i) out[i] = i;
      return out;
    }
    case SchemeKind::kCustom:
      return std::get<CustomVariant>(variant).beta;
  }
  return {};
}

namespace {

void RequireIncreasing(const std::vector<Exponent>& v, const char* name) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) {
      throw Error(ErrorCode::kBadParams, std::string(name) + " must be strictly increasing");
    }
  }
}

}  // namespace

void SchemeParams::Validate() const {
  if (k == 0 || m == 0 || l == 0) throw Error(ErrorCode::kBadParams, "K, M, L must be positive");
  switch (kind()) {
    case SchemeKind::kMp: {
      const u64 dd = d();
      if (dd == 0 || dd > m || Gcd(dd, m) != 1) {
        throw Error(ErrorCode::kBadD, "D = " + std::to_string(dd) + " needs 1 <= D <= M = " +
                                          std::to_string(m) + " and gcd(D, M) = 1");
      }
      break;
    }
    case SchemeKind::kGgasp:
      if (t > 0 && (r() < 1 || r() > std::min(k * m, t))) {
        throw Error(ErrorCode::kBadR, "r = " + std::to_string(r()) + " outside [1, min(KM, T)] = [1, " +
                                          std::to_string(std::min(k * m, t)) + "]");
      }
      break;
    case SchemeKind::kCustom: {
      const auto& c = std::get<CustomVariant>(variant);
      if (c.alpha.size() != t || c.beta.size() != t) {
        throw Error(ErrorCode::kBadParams, "alpha and beta need T entries each");
      }
      RequireIncreasing(c.alpha, "alpha");
      RequireIncreasing(c.beta, "beta");
      break;
    }
  }
}

bool SchemeParams::operator==(const SchemeParams& o) const {
  if (k != o.k || m != o.m || l != o.l || t != o.t || kind() != o.kind()) return false;
  switch (kind()) {
    case SchemeKind::kMp:
      return d() == o.d();
    case SchemeKind::kGgasp:
      return t == 0 || r() == o.r();
    case SchemeKind::kCustom:
      return alpha() == o.alpha() && beta() == o.beta();
  }
  return false;
}

namespace {

u64 ParseNumber(std::string_view text, std::string_view key) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError,
                "bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

std::vector<Exponent> ParseList(std::string_view text, std::string_view key) {
  std::vector<Exponent> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t sep = text.find(';', start);
    out.push_back(ParseNumber(text.substr(start, sep - start), key));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return out;
}

std::string JoinList(const std::vector<Exponent>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s.push_back(';');
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

SchemeParams ParseSchemeSpec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "scheme spec '" + std::string(spec) + "' lacks 'kind:'");
  }
  const std::string_view kind = spec.substr(0, colon);
  std::map<std::string, std::string, std::less<>> kv;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    if (!kv.emplace(key, std::string(item.substr(eq + 1))).second) {
      throw Error(ErrorCode::kParseError, "duplicate key '" + key + "'");
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  auto take = [&](const char* key, std::optional<u64> fallback) -> u64 {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (fallback) return *fallback;
      throw Error(ErrorCode::kParseError, std::string("missing ") + key + " in '" + std::string(spec) + "'");
    }
    const u64 v = ParseNumber(it->second, key);
    kv.erase(it);
    return v;
  };

  SchemeParams params;
  params.k = take("K", std::nullopt);
  params.m = take("M", std::nullopt);
  params.l = take("L", std::nullopt);
  if (kind == "mp") {
    params.t = take("T", std::nullopt);
    params.variant = MpVariant{take("D", 1)};
  } else if (kind == "ggasp") {
    params.t = take("T", std::nullopt);
    params.variant = GgaspVariant{take("r", params.t == 0 ? std::optional<u64>(1) : std::nullopt)};
  } else if (kind == "custom") {
    CustomVariant c;
    for (const char* key : {"alpha", "beta"}) {
      auto it = kv.find(key);
      if (it == kv.end()) throw Error(ErrorCode::kParseError, std::string("missing ") + key);
      (std::string_view(key) == "alpha" ? c.alpha : c.beta) = ParseList(it->second, key);
      kv.erase(it);
    }
    params.t = c.alpha.size();
    if (kv.count("T") != 0 && take("T", std::nullopt) != params.t) {
      throw Error(ErrorCode::kParseError, "T disagrees with the length of alpha");
    }
    params.variant = std::move(c);
  } else {
    throw Error(ErrorCode::kParseError, "unknown scheme kind '" + std::string(kind) + "'");
  }
  if (!kv.empty()) {
    throw Error(ErrorCode::kParseError, "unknown key '" + kv.begin()->first + "' for " + std::string(kind));
  }
  params.Validate();
  return params;
}

std::string FormatSchemeSpec(const SchemeParams& p) {
  const std::string base = "K=" + std::to_string(p.k) + ",M=" + std::to_string(p.m) +
                           ",L=" + std::to_string(p.l) + ",T=" + std::to_string(p.t);
  switch (p.kind()) {
    case SchemeKind::kMp:
      return "mp:" + base + ",D=" + std::to_string(p.d());
    case SchemeKind::kGgasp:
      return "ggasp:" + base + ",r=" + std::to_string(p.r());
    case SchemeKind::kCustom:
      return "custom:" + base + ",alpha=" + JoinList(p.alpha()) + ",beta=" + JoinList(p.beta());
  }
  return {};
}

std::vector<Exponent> GgaspAlpha(u64 k, u64 m, u64 t, u64 r) {
  if (t == 0) return {};
  if (r < 1 || r > std::min(k * m, t)) {
    throw Error(ErrorCode::kBadR, "r = " + std::to_string(r) + " outside [1, min(KM, T)]");
  }
  std::vector<Exponent> out;
  out.reserve(t);
  for (u64 u = 0; out.size() < t; ++u) {
    for (u64 i = 0; i < r && out.size() < t; ++i) out.push_back(u * k * m + i);
  }
  return out;
}

PartitionedInput PartitionedInput::Random(const Field& field, u64 k, u64 m, u64 l,
                                          std::size_t a_rows, std::size_t inner,
                                          std::size_t b_cols, Rng& rng) {
  PartitionedInput in{k, m, l, {}, {}};
  for (u64 i = 0; i < k * m; ++i) in.a_blocks.push_back(BlockMatrix::Random(field, a_rows, inner, rng));
  for (u64 i = 0; i < m * l; ++i) in.b_blocks.push_back(BlockMatrix::Random(field, inner, b_cols, rng));
  return in;
}

PartitionedInput PartitionedInput::FromMatrices(const BlockMatrix& a, const BlockMatrix& b, u64 k,
                                                u64 m, u64 l) {
  if (a.cols() != b.rows() || a.rows() % k != 0 || a.cols() % m != 0 || b.cols() % l != 0) {
    throw Error(ErrorCode::kShapeMismatch, "matrix dimensions do not split into the K x M x L grid");
  }
  const std::size_t ar = a.rows() / k, s = a.cols() / m, bc = b.cols() / l;
  PartitionedInput in{k, m, l, {}, {}};
  for (u64 i = 0; i < k; ++i) {
    for (u64 j = 0; j < m; ++j) {
      BlockMatrix blk(a.field(), ar, s);
      for (std::size_t x = 0; x < ar; ++x) {
        for (std::size_t y = 0; y < s; ++y) blk.at(x, y) = a.at(i * ar + x, j * s + y);
      }
      in.a_blocks.push_back(std::move(blk));
    }
  }
  for (u64 i = 0; i < m; ++i) {
    for (u64 j = 0; j < l; ++j) {
      BlockMatrix blk(b.field(), s, bc);
      for (std::size_t x = 0; x < s; ++x) {
        for (std::size_t y = 0; y < bc; ++y) blk.at(x, y) = b.at(i * s + x, j * bc + y);
      }
      in.b_blocks.push_back(std::move(blk));
    }
  }
  return in;
}

BlockMatrix PartitionedInput::ProductBlock(u64 row, u64 col, MulCounter* counter) const {
  BlockMatrix acc = Mul(A(row, 0), B(0, col), counter);
  for (u64 j = 1; j < m; ++j) acc += Mul(A(row, j), B(j, col), counter);
  return acc;
}

void PartitionedInput::Validate() const {
  if (a_blocks.size() != k * m || b_blocks.size() != m * l || a_blocks.empty() || b_blocks.empty()) {
    throw Error(ErrorCode::kShapeMismatch, "block grid sizes do not match K, M, L");
  }
  for (const BlockMatrix& blk : a_blocks) {
    if (!blk.SameShape(a_blocks.front())) throw Error(ErrorCode::kShapeMismatch, "A blocks differ in shape");
  }
  for (const BlockMatrix& blk : b_blocks) {
    if (!blk.SameShape(b_blocks.front())) throw Error(ErrorCode::kShapeMismatch, "B blocks differ in shape");
  }
  if (a_blocks.front().cols() != b_blocks.front().rows()) {
    throw Error(ErrorCode::kShapeMismatch, "inner block dimensions differ");
  }
}

namespace {

void CheckGrid(const PartitionedInput& input, const SchemeParams& params) {
  input.Validate();
  if (input.k != params.k || input.m != params.m || input.l != params.l) {
    throw Error(ErrorCode::kShapeMismatch, "input partition does not match scheme parameters");
  }
}

void CheckMasks(std::span<const BlockMatrix> masks, const BlockMatrix& like, u64 t) {
  if (masks.size() != t) {
    throw Error(ErrorCode::kBadParams,
                "expected " + std::to_string(t) + " masks, got " + std::to_string(masks.size()));
  }
  for (const BlockMatrix& r : masks) {
    if (!r.SameShape(like)) throw Error(ErrorCode::kShapeMismatch, "mask shape differs from block shape");
  }
}

}  // namespace

MatPoly BuildF(const PartitionedInput& input, const SchemeParams& params,
               std::span<const BlockMatrix> masks) {
  CheckGrid(input, params);
  const BlockMatrix& like = input.a_blocks.front();
  CheckMasks(masks, like, params.t);
  MatPoly f(like.field(), like.rows(), like.cols());
  for (u64 k = 0; k < params.k; ++k) {
    for (u64 m = 0; m < params.m; ++m) f.AddTerm(m + k * params.m, input.A(k, m));
  }
  const std::vector<Exponent> alpha = params.alpha();
  for (u64 t = 0; t < params.t; ++t) f.AddTerm(params.kml() + alpha[t], masks[t]);
  return f;
}

MatPoly BuildG(const PartitionedInput& input, const SchemeParams& params,
               std::span<const BlockMatrix> masks) {
  CheckGrid(input, params);
  const BlockMatrix& like = input.b_blocks.front();
  CheckMasks(masks, like, params.t);
  MatPoly g(like.field(), like.rows(), like.cols());
  for (u64 m = 0; m < params.m; ++m) {
    for (u64 l = 0; l < params.l; ++l) {
      g.AddTerm(params.m - 1 - m + l * params.k * params.m, input.B(m, l));
    }
  }
  const std::vector<Exponent> beta = params.beta();
  for (u64 t = 0; t < params.t; ++t) g.AddTerm(params.kml() + beta[t], masks[t]);
  return g;
}

std::vector<BlockMatrix> DrawMasksA(const PartitionedInput& input, u64 t, Rng& rng) {
  std::vector<BlockMatrix> out;
  const BlockMatrix& like = input.a_blocks.front();
  for (u64 i = 0; i < t; ++i) out.push_back(BlockMatrix::Random(like.field(), like.rows(), like.cols(), rng));
  return out;
}

std::vector<BlockMatrix> DrawMasksB(const PartitionedInput& input, u64 t, Rng& rng) {
  std::vector<BlockMatrix> out;
  const BlockMatrix& like = input.b_blocks.front();
  for (u64 i = 0; i < t; ++i) out.push_back(BlockMatrix::Random(like.field(), like.rows(), like.cols(), rng));
  return out;
}

std::map<std::pair<u64, u64>, Exponent> ProductBlockPositions(const SchemeParams& params) {
  std::map<std::pair<u64, u64>, Exponent> out;
  for (u64 k = 0; k < params.k; ++k) {
    for (u64 l = 0; l < params.l; ++l) {
      out[{k, l}] = params.m - 1 + k * params.m + l * params.k * params.m;
    }
  }
  return out;
}

}  // namespace mpcodes
