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

#include "mpcodes/thresholds.hpp"

#include <algorithm>
#include <tuple>

#include "mpcodes/error.hpp"

namespace mpcodes {

namespace {

using i64 = std::int64_t;

i64 FloorDiv(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 CeilDiv(i64 a, i64 b) { return -FloorDiv(-a, b); }

struct Interval {
  Exponent lo, hi;  // inclusive
};

std::vector<Interval> ComponentIntervals(const SchemeParams& p) {
  const u64 km = p.k * p.m;
  const u64 kml = p.kml();
  const std::vector<Exponent> alpha = p.alpha();
  const std::vector<Exponent> beta = p.beta();
  std::vector<Interval> out;
  out.push_back({0, kml + p.m - 2});
  for (Exponent b : beta) out.push_back({kml + b, kml + km - 1 + b});
  for (Exponent a : alpha) {
    for (u64 l = 0; l < p.l; ++l) out.push_back({kml + l * km + a, kml + l * km + p.m - 1 + a});
  }
  for (Exponent a : alpha) {
    for (Exponent b : beta) out.push_back({2 * kml + a + b, 2 * kml + a + b});
  }
  return out;
}

Rational RateOf(const SchemeParams& p, u64 n) { return Rational(p.kml(), n); }

}  // namespace

SupportSets SymbolicSupport(const SchemeParams& params) {
  std::vector<Interval> parts = ComponentIntervals(params);
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
  });
  SupportSets out;
  Exponent next = 0;  // smallest exponent not yet emitted
  bool any = false;
  for (const Interval& iv : parts) {
    Exponent from = any ? std::max(next, iv.lo) : iv.lo;
    for (Exponent e = from; e <= iv.hi; ++e) out.supp_h.push_back(e);
    if (!any || iv.hi + 1 > next) next = iv.hi + 1;
    any = true;
  }
  for (Exponent e : out.supp_h) {
    if (e % params.m == params.m - 1) out.supp_hhat.push_back(e);
  }
  return out;
}

ThresholdReport MpThresholdClosedForm(u64 k, u64 m, u64 l, u64 t, u64 d, std::int64_t l0_offset) {
  const SchemeParams params = SchemeParams::Mp(k, m, l, t, d);
  params.Validate();
  ThresholdReport rep;
  rep.params = params;
  if (t == 0) {
    rep.p = k * l;
    rep.delta = 0;
  } else {
    const i64 K = static_cast<i64>(k), M = static_cast<i64>(m), L = static_cast<i64>(l);
    const i64 T = static_cast<i64>(t), D = static_cast<i64>(d);
    const i64 km = K * M, kml = km * L;
    const i64 shift = (T - 1) * D;  // alpha_{T-1} = beta_{T-1}
    const i64 l0 = std::min(1 + FloorDiv(shift - 1, km), L - 1) + l0_offset;
    const i64 q = FloorDiv(shift, M);
    auto tail_from = [&](i64 t0) {
      i64 tail = 0;
      for (i64 s = t0; s <= 2 * T - 2; ++s) {
        if ((2 * kml + s * D) % M == M - 1) ++tail;
      }
      return tail;
    };
    i64 p = 0;
    i64 t0 = 0;
    if (T >= 2 && L >= 2) {
      // The displayed formula is exact in this range.
      t0 = std::max<i64>(CeilDiv(M - km, D) + T - 1, 0);
      p = K * (L + l0) + (L - l0 - 1) * std::min(q + 1, K) + q + 1;
    } else {
      const i64 k0 = std::min(M + shift, km);
      // End of supp(f_I g_R) and of the last f_R g_I row.
      const i64 e_fign = kml + km - 1 + shift;
      const i64 last_end = 2 * kml - km + M - 1 + shift;
      if (l0 <= L - 2) {
        // Dense head [0 : F], then the rows l0+1 .. L-2 of f_R g_I, each
        // holding min(q+1, K) exponents = M-1 mod M, then the last row.
        const i64 f = std::max(kml + l0 * km + k0 - 1, e_fign);
        p = (f + 1) / M + (L - l0 - 2) * std::min(q + 1, K) + q + 1;
      } else {
        p = (std::max(last_end, e_fign) + 1) / M;
      }
      // Tail of isolated f_R g_R exponents beyond the dense part.
      t0 = std::max<i64>(0, FloorDiv(std::max(last_end, e_fign) - 2 * kml, D) + 1);
    }
    const i64 tail = tail_from(t0);
    p += tail;
    rep.l0 = l0;
    rep.t0 = t0;
    rep.delta = t0 <= 2 * T - 2
                    ? static_cast<int>(tail - FloorDiv((2 * T - 2 - t0) * D + 1, D * M))
                    : 0;
    rep.p = static_cast<u64>(p);
  }
  rep.n = m * rep.p;
  rep.p_prime = rep.p;
  rep.n_prime = SymbolicSupport(params).supp_h.size();
  rep.rate = RateOf(params, rep.n);
  return rep;
}

u64 MpThresholdPublished(u64 k, u64 m, u64 l, u64 t, u64 d) {
  SchemeParams::Mp(k, m, l, t, d).Validate();
  if (t == 0) return k * m * l;
  const i64 K = static_cast<i64>(k), M = static_cast<i64>(m), L = static_cast<i64>(l);
  const i64 T = static_cast<i64>(t), D = static_cast<i64>(d);
  const i64 km = K * M, kml = km * L;
  const i64 l0 = std::min(1 + FloorDiv((T - 1) * D - 1, km), L - 1);
  const i64 t0 = std::max<i64>(CeilDiv(M - km, D) + T - 1, 0);
  const i64 q = FloorDiv((T - 1) * D, M);
  // floor((Z2 - Z1 + 1)/DM) + delta is the exact tail count.
  i64 tail = 0;
  for (i64 s = t0; s <= 2 * T - 2; ++s) {
    if ((2 * kml + s * D) % M == M - 1) ++tail;
  }
  const i64 p = K * (L + l0) + (L - l0 - 1) * std::min(q + 1, K) + q + 1 + tail;
  return static_cast<u64>(M * p);
}

namespace {

struct GgaspParts {
  i64 km, kml, L, U, r0, T, M, r;

  i64 S(i64 ell) const {
    if (ell <= L - 1) return M + r - 1;
    if (ell == L + U - 1) return r0 == 0 ? T + r - 1 : std::max(M + r0, T + r) - 1;
    if (ell == L + U) return r0 == 0 ? 0 : T + r0 - 1;
    return std::max(M, T) + r - 1;  // L <= ell <= L + U - 2
  }

  i64 V() const {
    return r0 == 0 ? S(L + U - 1) + S(L + U) : std::min(S(L + U - 1), km) + S(L + U);
  }

  // kml + max(...) + sum + V from the head row `l0` onward.
  i64 Standard(i64 l0) const {
    i64 n = kml + std::max(l0 * km + std::min(S(l0), km), km + T - 1);
    for (i64 ell = l0 + 1; ell <= L + U - 2; ++ell) n += std::min(S(ell), km);
    return n + V();
  }
};

GgaspParts MakeParts(u64 k, u64 m, u64 l, u64 t, u64 r) {
  const i64 km = static_cast<i64>(k * m);
  return GgaspParts{km,
                    km * static_cast<i64>(l),
                    static_cast<i64>(l),
                    static_cast<i64>(t / r),
                    static_cast<i64>(t % r),
                    static_cast<i64>(t),
                    static_cast<i64>(m),
                    static_cast<i64>(r)};
}

}  // namespace

ThresholdReport GgaspThresholdClosedForm(u64 k, u64 m, u64 l, u64 t, u64 r) {
  const SchemeParams params = SchemeParams::Ggasp(k, m, l, t, t == 0 ? 1 : r);
  params.Validate();
  ThresholdReport rep;
  rep.params = params;
  if (t == 0) {
    rep.n = k * m * l + m - 1;
  } else {
    const GgaspParts g = MakeParts(k, m, l, t, r);
    const i64 l0 = 1 + FloorDiv(g.T - 2, g.km);
    const i64 top_row = g.L + g.U - 1;
    i64 n = 0;
    if (l0 < top_row) {
      n = g.Standard(l0);
    } else if (g.r0 == 0) {
      // The dense head already reaches the last non-empty row.
      n = g.kml + std::max(top_row * g.km + g.S(top_row), g.km + g.T - 1);
    } else {
      const i64 head = std::max(top_row * g.km + std::min(g.S(top_row), g.km), g.km + g.T - 1);
      const i64 tail_start = (top_row + 1) * g.km;
      const i64 tail_end = tail_start + g.S(top_row + 1);
      n = head >= tail_start ? g.kml + std::max(head, tail_end) : g.kml + head + g.S(top_row + 1);
    }
    rep.n = static_cast<u64>(n);
    rep.l0 = std::min(l0, top_row);
    rep.u = static_cast<u64>(g.U);
    rep.r0 = static_cast<u64>(g.r0);
    rep.v = static_cast<u64>(g.V());
  }
  rep.n_prime = rep.n;
  rep.rate = RateOf(params, rep.n);
  return rep;
}

u64 GgaspThresholdPublished(u64 k, u64 m, u64 l, u64 t, u64 r) {
  SchemeParams::Ggasp(k, m, l, t, t == 0 ? 1 : r).Validate();
  if (t == 0) return k * m * l + m - 1;
  const GgaspParts g = MakeParts(k, m, l, t, r);
  const i64 l0 = std::min(1 + FloorDiv(g.T - 2, g.km), g.L);
  return static_cast<u64>(g.Standard(l0));
}

ThresholdReport ThresholdFromSupport(const SchemeParams& params) {
  params.Validate();
  const SupportSets s = SymbolicSupport(params);
  ThresholdReport rep;
  rep.params = params;
  rep.n_prime = s.supp_h.size();
  if (params.uses_mod_m()) {
    rep.p = rep.p_prime = s.supp_hhat.size();
    rep.n = params.m * rep.p;
  } else {
    rep.n = rep.n_prime;
  }
  rep.rate = RateOf(params, rep.n);
  return rep;
}

ThresholdReport Threshold(const SchemeParams& params) {
  switch (params.kind()) {
    case SchemeKind::kMp:
      return MpThresholdClosedForm(params.k, params.m, params.l, params.t, params.d());
    case SchemeKind::kGgasp:
      return GgaspThresholdClosedForm(params.k, params.m, params.l, params.t, params.r());
    case SchemeKind::kCustom:
      return ThresholdFromSupport(params);
  }
  return {};
}

OptimalR OptimalGgaspR(u64 k, u64 m, u64 l, u64 t) {
  if (t == 0) throw Error(ErrorCode::kBadParams, "optimal r needs T >= 1");
  OptimalR best{0, 0};
  for (u64 r = 1; r <= std::min(k * m, t); ++r) {
    const u64 n = GgaspThresholdClosedForm(k, m, l, t, r).n;
    if (best.r == 0 || n < best.n) best = {r, n};
  }
  return best;
}

namespace {

ThresholdReport BestGgasp(u64 k, u64 m, u64 l, u64 t) {
  const u64 r = t == 0 ? 1 : OptimalGgaspR(k, m, l, t).r;
  return GgaspThresholdClosedForm(k, m, l, t, r);
}

}  // namespace

std::vector<SweepRow> RateSweep(const SweepGrid& grid) {
  std::vector<SweepRow> rows;
  for (u64 k : grid.ks) {
    for (u64 m : grid.ms) {
      for (u64 l : grid.ls) {
        for (u64 t = grid.t_min; t <= grid.t_max; ++t) {
          if (grid.mp) rows.push_back({"mp", t, true, MpThresholdClosedForm(k, m, l, t, 1)});
          if (grid.ggasp) rows.push_back({"ggasp", t, true, BestGgasp(k, m, l, t)});
        }
      }
    }
  }
  return rows;
}

std::vector<SweepRow> FixedNSearch(const FixedNQuery& query) {
  std::vector<SweepRow> rows;
  const auto better = [](const ThresholdReport& a, const ThresholdReport& b) {
    if (a.rate != b.rate) return b.rate < a.rate;
    if (a.n != b.n) return a.n < b.n;
    return std::tie(a.params.k, a.params.m, a.params.l) < std::tie(b.params.k, b.params.m, b.params.l);
  };
  for (u64 t = query.t_min; t <= query.t_max; ++t) {
    for (const char* scheme : {"mp", "ggasp"}) {
      const bool mp = std::string_view(scheme) == "mp";
      if ((mp && !query.mp) || (!mp && !query.ggasp)) continue;
      std::optional<ThresholdReport> best;
      // N >= KML for every code, so KML <= n bounds the search.
      for (u64 k = std::max<u64>(query.k_min, 1); k * query.m_min * query.l_min <= query.n; ++k) {
        for (u64 m = std::max<u64>(query.m_min, 1); k * m * query.l_min <= query.n; ++m) {
          for (u64 l = std::max<u64>(query.l_min, 1); k * m * l <= query.n; ++l) {
            const ThresholdReport rep = mp ? MpThresholdClosedForm(k, m, l, t, 1) : BestGgasp(k, m, l, t);
            if (rep.n > query.n) continue;
            if (!best || better(rep, *best)) best = rep;
          }
        }
      }
      SweepRow row{scheme, t, best.has_value(), {}};
      if (best) row.report = *best;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

MonotonicityReport ProbeMonotonicityInD(u64 max_kml, u64 max_t) {
  MonotonicityReport rep;
  for (u64 k = 1; k <= max_kml; ++k) {
    for (u64 m = 1; m <= max_kml; ++m) {
      for (u64 l = 1; l <= max_kml; ++l) {
        for (u64 t = 0; t <= max_t; ++t) {
          std::vector<u64> ds;
          for (u64 d = 1; d <= m; ++d) {
            if (Gcd(d, m) == 1) ds.push_back(d);
          }
          if (ds.size() < 2) continue;
          ++rep.points;
          for (std::size_t i = 1; i < ds.size(); ++i) {
            const u64 lo = MpThresholdClosedForm(k, m, l, t, ds[i - 1]).p;
            const u64 hi = MpThresholdClosedForm(k, m, l, t, ds[i]).p;
            if (lo > hi) rep.counterexamples.push_back({k, m, l, t, ds[i - 1], ds[i], lo, hi});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace mpcodes
