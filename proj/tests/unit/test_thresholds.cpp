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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mpcodes/error.hpp"
#include "mpcodes/code_schemes.hpp"
#include "mpcodes/thresholds.hpp"

namespace mpcodes {
namespace {

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

std::vector<Exponent> Range(Exponent lo, Exponent hi) {
  std::vector<Exponent> v;
  for (Exponent e = lo; e <= hi; ++e) v.push_back(e);
  return v;
}

// Direct sumset of the exponent sets of f and g.
std::vector<Exponent> SumsetOracle(const SchemeParams& p) {
  std::set<Exponent> fs, gs, h;
  for (u64 k = 0; k < p.k; ++k) {
    for (u64 m = 0; m < p.m; ++m) fs.insert(m + k * p.m);
  }
  for (u64 l = 0; l < p.l; ++l) {
    for (u64 m = 0; m < p.m; ++m) gs.insert(p.m - 1 - m + l * p.k * p.m);
  }
  for (Exponent a : p.alpha()) fs.insert(p.kml() + a);
  for (Exponent b : p.beta()) gs.insert(p.kml() + b);
  for (Exponent x : fs) {
    for (Exponent y : gs) h.insert(x + y);
  }
  return {h.begin(), h.end()};
}

TEST(SymbolicSupport, MatchesSumsetOracle) {
  for (u64 k = 1; k <= 4; ++k) {
    for (u64 m = 1; m <= 4; ++m) {
      for (u64 l = 1; l <= 4; ++l) {
        for (u64 t = 0; t <= 8; ++t) {
          for (u64 d = 1; d <= m; ++d) {
            if (Gcd(d, m) != 1) continue;
            const auto p = SchemeParams::Mp(k, m, l, t, d);
            ASSERT_EQ(SymbolicSupport(p).supp_h, SumsetOracle(p)) << FormatSchemeSpec(p);
          }
          for (u64 r = 1; r <= std::max<u64>(1, std::min(k * m, t)); ++r) {
            const auto p = SchemeParams::Ggasp(k, m, l, t, r);
            ASSERT_EQ(SymbolicSupport(p).supp_h, SumsetOracle(p)) << FormatSchemeSpec(p);
          }
        }
      }
    }
  }
}

TEST(SymbolicSupport, MatchesRandomProducts) {
  const Field f = MakeField(kMersenne61, 1);
  Rng rng(13);
  for (u64 k = 1; k <= 3; ++k) {
    for (u64 m = 1; m <= 3; ++m) {
      for (u64 l = 1; l <= 3; ++l) {
        for (u64 t = 0; t <= 5; ++t) {
          const auto p = SchemeParams::Mp(k, m, l, t, 1);
          const auto want = SymbolicSupport(p).supp_h;
          for (int i = 0; i < 100; ++i) {
            const auto in = PartitionedInput::Random(f, k, m, l, 1, 1, 1, rng);
            const MatPoly h = PolyMul(BuildF(in, p, DrawMasksA(in, t, rng)), BuildG(in, p, DrawMasksB(in, t, rng)));
            ASSERT_EQ(Support(h), want) << FormatSchemeSpec(p);
          }
        }
      }
    }
  }
}

TEST(SymbolicSupport, WorkedExamples) {
  EXPECT_EQ(SymbolicSupport(SchemeParams::Mp(2, 3, 2, 0, 1)).supp_h, Range(0, 13));
  auto t1 = SymbolicSupport(SchemeParams::Mp(2, 3, 2, 1, 1));
  auto want1 = Range(0, 20);
  want1.push_back(24);
  EXPECT_EQ(t1.supp_h, want1);
  EXPECT_EQ(t1.supp_hhat, (std::vector<Exponent>{2, 5, 8, 11, 14, 17, 20}));
  auto want2 = Range(0, 21);
  for (Exponent e : {24, 25, 26}) want2.push_back(e);
  EXPECT_EQ(SymbolicSupport(SchemeParams::Mp(2, 3, 2, 2, 1)).supp_h, want2);
  EXPECT_EQ(SymbolicSupport(SchemeParams::Mp(2, 3, 2, 3, 1)).supp_hhat,
            (std::vector<Exponent>{2, 5, 8, 11, 14, 17, 20, 26}));
  EXPECT_EQ(SymbolicSupport(SchemeParams::Ggasp(5, 2, 5, 4, 2)).supp_h.back(), 114u);
}

TEST(ClosedForms, EqualTheSupportOracle) {
  std::size_t points = 0;
  for (u64 k = 1; k <= 4; ++k) {
    for (u64 m = 1; m <= 4; ++m) {
      for (u64 l = 1; l <= 4; ++l) {
        for (u64 t = 0; t <= 8; ++t) {
          for (u64 d = 1; d <= m; ++d) {
            if (Gcd(d, m) != 1) continue;
            ++points;
            const auto p = SchemeParams::Mp(k, m, l, t, d);
            const auto r = MpThresholdClosedForm(k, m, l, t, d);
            ASSERT_EQ(r.n, m * SymbolicSupport(p).supp_hhat.size()) << FormatSchemeSpec(p);
            if (r.delta) {
              ASSERT_GE(*r.delta, 0);
              ASSERT_LE(*r.delta, 1);
            }
          }
          for (u64 r = 1; r <= std::max<u64>(1, std::min(k * m, t)); ++r) {
            ++points;
            const auto p = SchemeParams::Ggasp(k, m, l, t, r);
            ASSERT_EQ(GgaspThresholdClosedForm(k, m, l, t, r).n, SymbolicSupport(p).supp_h.size())
                << FormatSchemeSpec(p);
          }
        }
      }
    }
  }
  EXPECT_EQ(points, 2688u);
}

TEST(ClosedForms, PublishedFormulasAgreeOnTheirRange) {
  std::size_t mp_off = 0, gg_off = 0;
  for (u64 k = 1; k <= 4; ++k) {
    for (u64 m = 1; m <= 4; ++m) {
      for (u64 l = 1; l <= 4; ++l) {
        for (u64 t = 0; t <= 8; ++t) {
          for (u64 d = 1; d <= m; ++d) {
            if (Gcd(d, m) != 1) continue;
            const bool agree = MpThresholdPublished(k, m, l, t, d) == MpThresholdClosedForm(k, m, l, t, d).n;
            if (t >= 2 && l >= 2) EXPECT_TRUE(agree);
            mp_off += agree ? 0 : 1;
          }
          for (u64 r = 1; r <= std::max<u64>(1, std::min(k * m, t)); ++r) {
            const bool agree = GgaspThresholdPublished(k, m, l, t, r) == GgaspThresholdClosedForm(k, m, l, t, r).n;
            if (l >= 2 && t <= k * m) EXPECT_TRUE(agree);
            gg_off += agree ? 0 : 1;
          }
        }
      }
    }
  }
  // Frozen from the oracle comparison over this grid.
  EXPECT_EQ(mp_off, 153u);
  EXPECT_EQ(gg_off, 319u);
}

TEST(ClosedForms, WorkedExamples) {
  const auto a = MpThresholdClosedForm(2, 3, 2, 3, 1);
  EXPECT_EQ(a.p, 8u);
  EXPECT_EQ(a.n, 24u);
  EXPECT_EQ(a.rate, Rational(1, 2));
  EXPECT_EQ(MpThresholdClosedForm(5, 2, 5, 4, 1).n, 82u);
  EXPECT_EQ(GgaspThresholdClosedForm(5, 2, 5, 4, 2).n, 82u);
  EXPECT_EQ(MpThresholdClosedForm(3, 4, 2, 0, 1).n, 24u);
  EXPECT_EQ(GgaspThresholdClosedForm(3, 4, 2, 0, 1).n, 27u);
  EXPECT_EQ(GgaspThresholdClosedForm(2, 2, 2, 3, 1).n, SymbolicSupport(SchemeParams::Ggasp(2, 2, 2, 3, 1)).supp_h.size());
}

TEST(ClosedForms, L0OffsetPerturbsTheWorkedExample) {
  EXPECT_NE(MpThresholdClosedForm(2, 3, 2, 3, 1, -1).n, 24u);
  EXPECT_NE(MpThresholdClosedForm(2, 3, 2, 3, 1, 1).n, 24u);
}

TEST(ClosedForms, BadParameters) {
  EXPECT_THROW(MpThresholdClosedForm(2, 4, 2, 3, 2), Error);
  EXPECT_THROW(GgaspThresholdClosedForm(2, 1, 2, 3, 3), Error);
  EXPECT_THROW(OptimalGgaspR(2, 2, 2, 0), Error);
}

TEST(OptimalR, MatchesBruteForce) {
  EXPECT_EQ(OptimalGgaspR(5, 2, 5, 4).r, 2u);
  EXPECT_EQ(OptimalGgaspR(5, 2, 5, 4).n, 82u);
  EXPECT_EQ(OptimalGgaspR(3, 3, 3, 1).r, 1u);
  u64 best_r = 0, best_n = 0;
  for (u64 r = 1; r <= 6; ++r) {
    const u64 n = SymbolicSupport(SchemeParams::Ggasp(3, 3, 3, 6, r)).supp_h.size();
    if (best_r == 0 || n < best_n) {
      best_r = r;
      best_n = n;
    }
  }
  EXPECT_EQ(OptimalGgaspR(3, 3, 3, 6).r, best_r);
  EXPECT_EQ(OptimalGgaspR(3, 3, 3, 6).n, best_n);
}

TEST(Sweep, EmptyRangeAndRateOne) {
  SweepGrid empty{{2}, {2}, {2}, 5, 4, true, true};
  EXPECT_TRUE(RateSweep(empty).empty());
  SweepGrid zero{{2}, {10}, {2}, 0, 0, true, false};
  const auto rows = RateSweep(zero);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].report.rate, Rational(1, 1));
}

TEST(Sweep, FigureOneGrid) {
  SweepGrid g{{2}, {10}, {2}, 0, 20, true, true};
  const auto rows = RateSweep(g);
  ASSERT_EQ(rows.size(), 42u);
  for (const auto& row : rows) {
    if (row.scheme == "mp") {
      EXPECT_EQ(row.report.n, MpThresholdClosedForm(2, 10, 2, row.t, 1).n);
    } else if (row.t > 0) {
      EXPECT_EQ(row.report.n, OptimalGgaspR(2, 10, 2, row.t).n);
    }
  }
}

TEST(FixedN, BestRateWithinBudget) {
  FixedNQuery q;
  q.n = 200;
  q.k_min = 2;
  q.m_min = 4;
  q.l_min = 2;
  q.t_min = 1;
  q.t_max = 12;
  for (const auto& row : FixedNSearch(q)) {
    ASSERT_TRUE(row.feasible);
    EXPECT_LE(row.report.n, 200u);
    Rational best(0, 1);
    for (u64 k = 2; k <= 25; ++k) {
      for (u64 m = 4; k * m * 2 <= 200; ++m) {
        for (u64 l = 2; k * m * l <= 200; ++l) {
          const u64 n = row.scheme == "mp" ? MpThresholdClosedForm(k, m, l, row.t, 1).n : OptimalGgaspR(k, m, l, row.t).n;
          if (n <= 200 && best < Rational(k * m * l, n)) best = Rational(k * m * l, n);
        }
      }
    }
    EXPECT_EQ(row.report.rate, best) << row.scheme << " T=" << row.t;
  }
}

TEST(FixedN, InfeasibleRowsAreMarked) {
  FixedNQuery q;
  q.n = 10;
  q.k_min = 2;
  q.m_min = 4;
  q.l_min = 2;
  q.t_min = 0;
  q.t_max = 1;
  for (const auto& row : FixedNSearch(q)) EXPECT_FALSE(row.feasible);
}

TEST(Monotonicity, ProbeFindsCounterexamples) {
  const auto rep = ProbeMonotonicityInD(6, 10);
  // Frozen from the probe; the growth of P in D is not monotone.
  EXPECT_EQ(rep.points, 1584u);
  EXPECT_EQ(rep.counterexamples.size(), 47u);
  const auto it = std::find_if(rep.counterexamples.begin(), rep.counterexamples.end(), [](const auto& c) {
    return c.k == 1 && c.m == 5 && c.l == 1 && c.t == 2 && c.d_low == 2 && c.d_high == 3;
  });
  ASSERT_NE(it, rep.counterexamples.end());
  EXPECT_EQ(it->p_low, 3u);
  EXPECT_EQ(it->p_high, 2u);
}

}  // namespace
}  // namespace mpcodes
