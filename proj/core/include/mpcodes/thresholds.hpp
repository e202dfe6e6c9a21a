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

#ifndef MPCODES_THRESHOLDS_HPP_
#define MPCODES_THRESHOLDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mpcodes/code_schemes.hpp"
#include "mpcodes/numtheory.hpp"

namespace mpcodes {

struct SupportSets {
  std::vector<Exponent> supp_h;     // generic support of h = fg
  std::vector<Exponent> supp_hhat;  // exponents of supp_h congruent to M-1 mod M
};

// Generic support of h = fg as the union of the four component supports
//   supp(f_I g_I) = [0 : KML + M - 2]
//   supp(f_I g_R) = U_t [KML + b_t : KML + KM - 1 + b_t]
//   supp(f_R g_I) = U_{t,l} [KML + lKM + a_t : KML + lKM + M - 1 + a_t]
//   supp(f_R g_R) = {2KML + a_t + b_s}.
// Purely set-theoretic; works for every scheme kind.
SupportSets SymbolicSupport(const SchemeParams& params);

struct ThresholdReport {
  SchemeParams params;
  u64 n = 0;        // recovery threshold
  u64 p = 0;        // hypernodes, N = M*P (mod-M codes only)
  u64 n_prime = 0;  // |supp(h)|
  u64 p_prime = 0;  // |supp(hhat)| (mod-M codes only)
  Rational rate;    // KML / N
  // Closed-form intermediates (MP: l0, t0, delta; GGASP: l0, U, r0, V).
  std::optional<std::int64_t> l0;
  std::optional<std::int64_t> t0;
  std::optional<int> delta;
  std::optional<u64> u;
  std::optional<u64> r0;
  std::optional<u64> v;
};

// Recovery threshold of the MP code alpha_t = beta_t = tD. For T >= 2 and
// L >= 2 this is the displayed formula P = K(L + l0) + (L - l0 - 1)
// min(q + 1, K) + q + 1 + tail; elsewhere a corrected count from the
// interval decomposition of supp(h). The tail of isolated exponents
// {2KML + tD} is enumerated directly. `l0_offset` perturbs l0 and exists only for mutation
// testing of the example verifier. Errors: kBadD.
ThresholdReport MpThresholdClosedForm(u64 k, u64 m, u64 l, u64 t, u64 d,
                                      std::int64_t l0_offset = 0);

// Recovery threshold of the GGASP_r code from its interval decomposition.
// Errors: kBadR.
ThresholdReport GgaspThresholdClosedForm(u64 k, u64 m, u64 l, u64 t, u64 r);

// The closed forms exactly as usually stated in the literature. They agree
// with the functions above when T >= 2 and L >= 2 (MP), respectively
// L >= 2 and T <= KM (GGASP), and can undercount outside that range; kept
// for comparison.
u64 MpThresholdPublished(u64 k, u64 m, u64 l, u64 t, u64 d);
u64 GgaspThresholdPublished(u64 k, u64 m, u64 l, u64 t, u64 r);

// Threshold computed from SymbolicSupport: M*|supp_hhat| for mod-M codes,
// |supp_h| for GGASP.
ThresholdReport ThresholdFromSupport(const SchemeParams& params);

// Closed form for MP and GGASP, support-based for custom shifts.
ThresholdReport Threshold(const SchemeParams& params);

struct OptimalR {
  u64 r = 1;
  u64 n = 0;
};

// argmin_r of the GGASP threshold over 1 <= r <= min(KM, T); ties to the
// smaller r. Errors: kBadParams when T = 0.
OptimalR OptimalGgaspR(u64 k, u64 m, u64 l, u64 t);

struct SweepRow {
  std::string scheme;  // "mp" or "ggasp"
  u64 t = 0;
  bool feasible = true;
  ThresholdReport report;  // meaningful only when feasible
};

struct SweepGrid {
  std::vector<u64> ks;
  std::vector<u64> ms;
  std::vector<u64> ls;
  u64 t_min = 0;
  u64 t_max = 0;  // inclusive; an empty range when t_max < t_min
  bool mp = true;
  bool ggasp = true;
};

// MP with D = 1 and GGASP with the optimal r at every grid point; rows are
// ordered by (K, M, L, T, scheme).
std::vector<SweepRow> RateSweep(const SweepGrid& grid);

struct FixedNQuery {
  u64 n = 200;  // available workers
  u64 k_min = 1;
  u64 m_min = 1;
  u64 l_min = 1;
  u64 t_min = 0;
  u64 t_max = 0;
  bool mp = true;
  bool ggasp = true;
};

// For each T and scheme, the partition (K, M, L) within the bounds whose
// threshold fits in n and whose rate is largest. Ties prefer the smaller
// threshold, then the lexicographically smallest (K, M, L). Infeasible
// (T, scheme) pairs produce a row with feasible = false.
std::vector<SweepRow> FixedNSearch(const FixedNQuery& query);

struct MonotonicityCounterexample {
  u64 k, m, l, t;
  u64 d_low, d_high;  // d_low < d_high but P(d_low) > P(d_high)
  u64 p_low, p_high;
};

struct MonotonicityReport {
  u64 points = 0;  // (K, M, L, T) tuples with at least two admissible D
  std::vector<MonotonicityCounterexample> counterexamples;
};

// Checks whether P is non-decreasing in D over the admissible D for every
// K, M, L in [1, max_kml] and T in [0, max_t]. Observational only.
MonotonicityReport ProbeMonotonicityInD(u64 max_kml, u64 max_t);

}  // namespace mpcodes

#endif  // MPCODES_THRESHOLDS_HPP_
