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

#include "verify_examples.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "mpcodes/code_schemes.hpp"
#include "mpcodes/error.hpp"
#include "mpcodes/evaluation_plan.hpp"
#include "mpcodes/finite_field.hpp"
#include "mpcodes/linalg.hpp"
#include "mpcodes/linalg_checks.hpp"
#include "mpcodes/matpoly.hpp"
#include "mpcodes/sdmm_protocol.hpp"
#include "mpcodes/thresholds.hpp"

namespace mpcodes::cli {

namespace {

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

struct Outcome {
  bool passed = true;
  std::string detail;

  // Records the first failed expectation only.
  void Expect(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

using Body = std::function<Outcome(const ExampleOptions&)>;

struct Example {
  std::string id;
  std::vector<std::string> tags;
  std::string description;
  Body body;
};

template <class T>
std::string Str(const std::vector<T>& v) {
  // Runs of consecutive integers collapse to a..b.
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    if (i > 0) os << ',';
    os << v[i];
    if (j >= i + 2) {
      os << ".." << v[j];
      i = j + 1;
    } else {
      i = i + 1;
    }
  }
  os << '}';
  return os.str();
}

std::vector<Exponent> Range(Exponent lo, Exponent hi) {
  std::vector<Exponent> v;
  for (Exponent e = lo; e <= hi; ++e) v.push_back(e);
  return v;
}

std::vector<Exponent> Concat(std::vector<Exponent> a, const std::vector<Exponent>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

std::string Mismatch(const std::string& what, const std::string& expected, const std::string& got) {
  return what + ": expected " + expected + ", got " + got;
}

template <class A, class B>
std::string Mismatch(const std::string& what, const A& expected, const B& got) {
  std::ostringstream e, g;
  e << expected;
  g << got;
  return Mismatch(what, e.str(), g.str());
}

EvaluationPlan PowerPlan(u64 p, u64 zeta, u64 omega, const std::vector<u64>& exps, u64 m) {
  const Field field = MakeField(p, 1);
  std::vector<FieldElement> a;
  for (u64 e : exps) a.push_back(Pow(field->FromInt(static_cast<std::int64_t>(omega)), e));
  return EvaluationPlan::ModM(field, field->FromInt(static_cast<std::int64_t>(zeta)), m, std::move(a));
}

// Robustness instances over GF(31) and GF(61), K = L = 2, M = 3.
EvaluationPlan T0Plan() { return PowerPlan(31, 5, 15, Range(0, 5), 3); }
EvaluationPlan T1Plan() { return PowerPlan(31, 5, 15, Range(0, 7), 3); }
EvaluationPlan T2Plan() { return PowerPlan(61, 47, 8, {0, 1, 2, 3, 4, 7, 8, 9, 12, 13}, 3); }

EvalSearchResult Sec33Search(u64 seed) {
  EvalSearchOptions opts;
  opts.seed = seed;
  return FindEvaluationVector(SchemeParams::Mp(2, 3, 2, 3, 1), MakeField(13, 1), opts);
}

std::vector<Exponent> RandomTermExponents(const MatPoly& poly, Exponent kml) {
  std::vector<Exponent> out;
  for (Exponent e : Support(poly)) {
    if (e >= kml) out.push_back(e);
  }
  return out;
}

std::vector<Example> BuildExamples() {
  std::vector<Example> ex;

  // --- fields -------------------------------------------------------------
  ex.push_back({"gf169-modulus", {"fields", "mp"}, "x^2+12x+2 is irreducible over GF(13)",
                [](const ExampleOptions&) {
                  Outcome o;
                  o.Expect(IsIrreducible(13, {2, 12, 1}), "x^2+12x+2 reported reducible");
                  o.Expect(MakeFieldWithModulus(13, {2, 12, 1})->order() == 169, "GF(13^2) order");
                  return o;
                }});
  ex.push_back({"gf7-root3", {"fields", "mod-m"}, "zeta = 2 is the primitive 3rd root in GF(7)",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto z = PrimitiveRootOfUnity(MakeField(7, 1), 3).ToString();
                  o.Expect(z == "2", Mismatch("zeta", "2", z));
                  return o;
                }});
  ex.push_back({"gf13-root3", {"fields", "mp"}, "zeta = 3 is the primitive 3rd root in GF(13)",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto z = PrimitiveRootOfUnity(MakeField(13, 1), 3).ToString();
                  o.Expect(z == "3", Mismatch("zeta", "3", z));
                  return o;
                }});
  ex.push_back({"gf31-subgroup10", {"fields", "robustness"}, "omega = 15 generates the order-10 subgroup of GF(31)*",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto g = SubgroupGenerator(MakeField(31, 1), 10).ToString();
                  o.Expect(g == "15", Mismatch("generator", "15", g));
                  return o;
                }});
  ex.push_back({"gf61-subgroup20", {"fields", "robustness"}, "omega = 8 generates the order-20 subgroup of GF(61)*",
                [](const ExampleOptions&) {
                  Outcome o;
                  const Field f = MakeField(61, 1);
                  const auto g = SubgroupGenerator(f, 20).ToString();
                  o.Expect(g == "8", Mismatch("generator", "8", g));
                  o.Expect(Pow(f->FromInt(8), 20).is_one() && !Pow(f->FromInt(8), 10).is_one() &&
                               !Pow(f->FromInt(8), 4).is_one(),
                           "8 does not have order 20");
                  return o;
                }});

  // --- mod-M transform over GF(7) ---------------------------------------
  ex.push_back({"modm-transform", {"mod-m"}, "mod-3 transform of v0+...+v6x^6 over GF(7) is v2x^2+v5x^5",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const Field f = MakeField(7, 1);
                  Rng rng(opt.seed);
                  std::map<Exponent, FieldElement> v;
                  for (Exponent e = 0; e <= 6; ++e) v[e] = f->RandomNonzero(rng);
                  const MatPoly h = MatPoly::FromScalars(f, v);
                  const MatPoly hat = ModMTransform(h, 3, f->FromInt(2));
                  const auto supp = Support(hat);
                  o.Expect(supp == std::vector<Exponent>{2, 5}, Mismatch("supp(hhat)", "{2,5}", Str(supp)));
                  o.Expect(hat.Coeff(2).at(0, 0) == v[2] && hat.Coeff(5).at(0, 0) == v[5],
                           "coefficients of hhat differ from v2, v5");
                  o.Expect(hat == ModMTransformBySummation(h, 3, f->FromInt(2)), "summation form disagrees");
                  return o;
                }});
  ex.push_back({"modm-interpolate", {"mod-m"}, "a = (1, 3) recovers v2, v5 from two evaluations of hhat",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const Field f = MakeField(7, 1);
                  Rng rng(opt.seed + 1);
                  const FieldElement v2 = f->RandomNonzero(rng), v5 = f->RandomNonzero(rng);
                  const MatPoly hat = MatPoly::FromScalars(f, {{2, v2}, {5, v5}});
                  const std::vector<FieldElement> pts = {f->FromInt(1), f->FromInt(3)};
                  std::vector<BlockMatrix> vals;
                  for (const auto& x : pts) vals.push_back(EvalNaive(hat, x));
                  const std::vector<Exponent> supp = {2, 5};
                  o.Expect(Interpolate(supp, pts, vals) == hat, "interpolation did not recover hhat");
                  const EvaluationPlan plan = EvaluationPlan::ModM(f, f->FromInt(2), 3, pts);
                  o.Expect(DecodabilityCheck(plan, supp), "GV((1,3), {2,5}) singular");
                  return o;
                }});
  ex.push_back({"modm-degenerate", {"mod-m"}, "GV(a, {2,8}) over GF(7) is singular for every pair a",
                [](const ExampleOptions&) {
                  Outcome o;
                  const Field f = MakeField(7, 1);
                  const std::vector<Exponent> supp = {2, 8};
                  for (std::int64_t x = 0; x < 7 && o.passed; ++x) {
                    for (std::int64_t y = 0; y < 7 && o.passed; ++y) {
                      const std::vector<FieldElement> pts = {f->FromInt(x), f->FromInt(y)};
                      o.Expect(Determinant(GeneralizedVandermonde(f, pts, supp)).is_zero(),
                               "non-zero determinant at a = (" + std::to_string(x) + ", " + std::to_string(y) + ")");
                    }
                  }
                  return o;
                }});

  // --- MP worked example, K = L = 2, M = 3, T = 3 --------------------------
  ex.push_back({"mp-worked-f-info", {"mp"}, "information part of f for K=2, M=3 occupies {0..5}",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 0, 1);
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(MakeField(kMersenne61, 1), 2, 3, 2, 1, 1, 1, rng);
                  const auto supp = Support(BuildF(in, prm, {}));
                  o.Expect(supp == Range(0, 5), Mismatch("supp(f_I)", "{0..5}", Str(supp)));
                  return o;
                }});
  ex.push_back({"mp-worked-f-g-exponents", {"mp"}, "f on {0..5,12,13,14}, g on {0,1,2,6,7,8,12,13,14}",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 3, 1);
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(MakeField(kMersenne61, 1), 2, 3, 2, 1, 1, 1, rng);
                  const auto f = Support(BuildF(in, prm, DrawMasksA(in, 3, rng)));
                  const auto g = Support(BuildG(in, prm, DrawMasksB(in, 3, rng)));
                  const auto ef = Concat(Range(0, 5), {12, 13, 14});
                  const std::vector<Exponent> eg = {0, 1, 2, 6, 7, 8, 12, 13, 14};
                  o.Expect(f == ef, Mismatch("supp(f)", Str(ef), Str(f)));
                  o.Expect(g == eg, Mismatch("supp(g)", Str(eg), Str(g)));
                  return o;
                }});
  ex.push_back({"mp-worked-positions", {"mp"}, "A_k B_l sits at exponents 2, 5, 8, 11",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto pos = ProductBlockPositions(SchemeParams::Mp(2, 3, 2, 3, 1));
                  const std::map<std::pair<u64, u64>, Exponent> want = {
                      {{0, 0}, 2}, {{1, 0}, 5}, {{0, 1}, 8}, {{1, 1}, 11}};
                  o.Expect(pos == want, "product block positions differ from 2, 5, 8, 11");
                  return o;
                }});
  ex.push_back({"mp-worked-hhat", {"mp"}, "hhat supported on {2,5,8,11,14,17,20,26} with C_kl at 2, 5, 8, 11",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 3, 1);
                  const std::vector<Exponent> want = {2, 5, 8, 11, 14, 17, 20, 26};
                  const auto sym = SymbolicSupport(prm).supp_hhat;
                  o.Expect(sym == want, Mismatch("symbolic supp(hhat)", Str(want), Str(sym)));
                  const Field f = MakeFieldWithModulus(13, {2, 12, 1});
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(f, 2, 3, 2, 2, 2, 2, rng);
                  const MatPoly h = PolyMul(BuildF(in, prm, DrawMasksA(in, 3, rng)), BuildG(in, prm, DrawMasksB(in, 3, rng)));
                  const MatPoly hat = ModMTransform(h, 3, PrimitiveRootOfUnity(f, 3));
                  const auto actual = Support(hat);
                  o.Expect(std::includes(want.begin(), want.end(), actual.begin(), actual.end()),
                           Mismatch("supp(hhat) of a random instance", "subset of " + Str(want), Str(actual)));
                  for (const auto& [kl, e] : ProductBlockPositions(prm)) {
                    o.Expect(hat.Coeff(e) == in.ProductBlock(kl.first, kl.second),
                             "coefficient at x^" + std::to_string(e) + " is not the product block");
                  }
                  return o;
                }});
  ex.push_back({"mp-product-blocks", {"mp"}, "coefficient of x^{M-1+kM+lKM} in f_I g_I is A_k B_l",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 0, 1);
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(MakeField(kMersenne61, 1), 2, 3, 2, 2, 3, 2, rng);
                  const MatPoly h = PolyMul(BuildF(in, prm, {}), BuildG(in, prm, {}));
                  for (u64 k = 0; k < 2; ++k) {
                    for (u64 l = 0; l < 2; ++l) {
                      o.Expect(h.Coeff(2 + 3 * k + 6 * l) == in.ProductBlock(k, l),
                               "block (" + std::to_string(k) + "," + std::to_string(l) + ")");
                    }
                  }
                  return o;
                }});
  ex.push_back({"mp-worked-threshold", {"mp"}, "MP(K=L=2, M=3, T=3, D=1): P = 8, N = 24",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const auto r = MpThresholdClosedForm(2, 3, 2, 3, 1, opt.l0_offset);
                  o.Expect(r.p == 8 && r.n == 24,
                           Mismatch("(P, N)", "(8, 24)", "(" + std::to_string(r.p) + ", " + std::to_string(r.n) + ")"));
                  return o;
                }});
  ex.push_back({"mp-worked-eval-vector", {"mp"}, "no evaluation vector over GF(13) (13 < MP+1 = 25); one over GF(13^2)",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  EvalSearchOptions base;
                  base.seed = opt.seed;
                  base.escalate = false;
                  try {
                    FindEvaluationVector(SchemeParams::Mp(2, 3, 2, 3, 1), MakeField(13, 1), base);
                    o.Expect(false, "search succeeded inside GF(13)");
                  } catch (const Error& e) {
                    o.Expect(e.code() == ErrorCode::kBudgetExhausted, Mismatch("error", "BudgetExhausted", e.what()));
                  }
                  const auto res = Sec33Search(opt.seed);
                  o.Expect(res.plan.field->degree() == 2 && res.plan.field->characteristic() == 13,
                           Mismatch("field", "13^2", res.plan.field->Spec()));
                  o.Expect(res.plan.num_hypernodes() == 8, Mismatch("hypernodes", 8, res.plan.num_hypernodes()));
                  return o;
                }});
  ex.push_back({"mp-worked-simulate", {"mp"}, "24 workers over GF(13^2), no stragglers: product decodes exactly",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 3, 1);
                  const auto plan = Sec33Search(opt.seed).plan;
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(plan.field, 2, 3, 2, 2, 2, 2, rng);
                  const SimReport rep = RunProtocol(in, prm, plan, {}, opt.seed);
                  o.Expect(rep.num_workers == 24, Mismatch("workers", 24, rep.num_workers));
                  o.Expect(rep.decode_success, "decode failed: " + rep.failure);
                  return o;
                }});
  ex.push_back({"mp-t0-threshold", {"mp"}, "T = 0: MP threshold N = KML for K, M, L <= 4",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  for (u64 k = 1; k <= 4; ++k) {
                    for (u64 m = 1; m <= 4; ++m) {
                      for (u64 l = 1; l <= 4; ++l) {
                        const u64 n = MpThresholdClosedForm(k, m, l, 0, 1, opt.l0_offset).n;
                        o.Expect(n == k * m * l, Mismatch("N at K=" + std::to_string(k) + ",M=" + std::to_string(m) +
                                                              ",L=" + std::to_string(l),
                                                          k * m * l, n));
                      }
                    }
                  }
                  return o;
                }});

  // --- GGASP worked example, K = L = 5, M = 2, T = 4 -----------------------
  ex.push_back({"ggasp-worked-alpha", {"ggasp"}, "GGASP_2 shifts alpha = (0, 1, 10, 11)",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto a = GgaspAlpha(5, 2, 4, 2);
                  o.Expect(a == std::vector<Exponent>{0, 1, 10, 11}, Mismatch("alpha", "{0,1,10,11}", Str(a)));
                  return o;
                }});
  ex.push_back({"ggasp-worked-random-terms", {"ggasp"}, "random terms of f at {50,51,60,61}, of g at {50,51,52,53}",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Ggasp(5, 2, 5, 4, 2);
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(MakeField(kMersenne61, 1), 5, 2, 5, 1, 1, 1, rng);
                  const auto f = RandomTermExponents(BuildF(in, prm, DrawMasksA(in, 4, rng)), 50);
                  const auto g = RandomTermExponents(BuildG(in, prm, DrawMasksB(in, 4, rng)), 50);
                  o.Expect(f == std::vector<Exponent>{50, 51, 60, 61}, Mismatch("f random terms", "{50,51,60,61}", Str(f)));
                  o.Expect(g == std::vector<Exponent>{50, 51, 52, 53}, Mismatch("g random terms", "{50..53}", Str(g)));
                  return o;
                }});
  ex.push_back({"ggasp-worked-optimal-r", {"ggasp"}, "optimal r = 2 with N = 82",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto best = OptimalGgaspR(5, 2, 5, 4);
                  o.Expect(best.r == 2 && best.n == 82,
                           Mismatch("(r, N)", "(2, 82)", "(" + std::to_string(best.r) + ", " + std::to_string(best.n) + ")"));
                  return o;
                }});
  ex.push_back({"ggasp-worked-threshold", {"ggasp"}, "GGASP_2 threshold N = |supp(h)| = 82, deg(h) = 114",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Ggasp(5, 2, 5, 4, 2);
                  const u64 n = GgaspThresholdClosedForm(5, 2, 5, 4, 2).n;
                  const auto supp = SymbolicSupport(prm).supp_h;
                  o.Expect(n == 82, Mismatch("closed-form N", 82, n));
                  o.Expect(supp.size() == 82, Mismatch("|supp(h)|", 82, supp.size()));
                  o.Expect(supp.back() == 114, Mismatch("deg(h)", 114, supp.back()));
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(MakeField(kMersenne61, 1), 5, 2, 5, 1, 1, 1, rng);
                  const MatPoly h = PolyMul(BuildF(in, prm, DrawMasksA(in, 4, rng)), BuildG(in, prm, DrawMasksB(in, 4, rng)));
                  o.Expect(h.degree() == 114, Mismatch("deg(h) of a random instance", 114, h.degree()));
                  return o;
                }});
  ex.push_back({"ggasp-worked-mp-threshold", {"ggasp"}, "MP with the same partition and D = 1 also gives N = 82",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const u64 n = MpThresholdClosedForm(5, 2, 5, 4, 1, opt.l0_offset).n;
                  o.Expect(n == 82, Mismatch("N", 82, n));
                  return o;
                }});
  ex.push_back({"ggasp-worked-simulate", {"ggasp"}, "82 workers, no stragglers: GGASP_2 decodes exactly",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Ggasp(5, 2, 5, 4, 2);
                  EvalSearchOptions so;
                  so.seed = opt.seed;
                  const auto plan = FindEvaluationVector(prm, MakeField(kMersenne61, 1), so).plan;
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(plan.field, 5, 2, 5, 1, 2, 1, rng);
                  const SimReport rep = RunProtocol(in, prm, plan, {}, opt.seed);
                  o.Expect(rep.decode_success, "decode failed: " + rep.failure);
                  o.Expect(rep.responses_used == 82, Mismatch("responses used", 82, rep.responses_used));
                  return o;
                }});

  // --- Security and the shift D -----------------------------------------
  ex.push_back({"shift-coprime", {"shifts"}, "T=2, M=2: alpha=(0,1) gives an MDS Sigma_A",
                [](const ExampleOptions&) {
                  Outcome o;
                  const Field f = MakeField(13, 1);
                  const auto plan = EvaluationPlan::ModM(f, f->FromInt(12), 2,
                                                         {f->FromInt(1), f->FromInt(2), f->FromInt(3), f->FromInt(4)});
                  const auto res = SecurityCheckDetailed(plan, SchemeParams::Custom(1, 2, 1, {0, 1}, {0, 1}));
                  o.Expect(res.sigma_a.mds, "Sigma_A has a singular minor");
                  return o;
                }});
  ex.push_back({"shift-shared-factor", {"shifts"}, "T=2, M=2: alpha=(0,2) leaves a singular 2x2 minor",
                [](const ExampleOptions&) {
                  Outcome o;
                  const Field f = MakeField(13, 1);
                  const auto plan = EvaluationPlan::ModM(f, f->FromInt(12), 2,
                                                         {f->FromInt(1), f->FromInt(2), f->FromInt(3), f->FromInt(4)});
                  const auto res = SecurityCheckDetailed(plan, SchemeParams::Custom(1, 2, 1, {0, 2}, {0, 2}));
                  o.Expect(!res.sigma_a.mds, "Sigma_A unexpectedly MDS");
                  o.Expect(res.sigma_a.witness.size() == 2, Mismatch("witness size", 2, res.sigma_a.witness.size()));
                  return o;
                }});
  ex.push_back({"shift-non-coprime-d", {"shifts"}, "T=2: gcd(D, M) > 1 is insecure for every evaluation vector",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const Field f = MakeField(61, 1);
                  Rng rng(opt.seed);
                  for (u64 m : {2, 3, 4, 6}) {
                    const FieldElement zeta = PrimitiveRootOfUnity(f, m);
                    for (u64 d = 2; d <= m; ++d) {
                      if (Gcd(d, m) == 1) continue;
                      const auto prm = SchemeParams::Custom(1, m, 1, {0, d}, {0, d});
                      for (int trial = 0; trial < 10; ++trial) {
                        std::vector<FieldElement> a;
                        for (int p = 0; p < 3; ++p) a.push_back(f->RandomNonzero(rng));
                        const auto plan = EvaluationPlan::ModM(f, zeta, m, a);
                        o.Expect(!SecurityCheck(plan, prm),
                                 "secure plan for M=" + std::to_string(m) + ", D=" + std::to_string(d));
                      }
                    }
                  }
                  return o;
                }});

  // --- Robustness (K = L = 2, M = 3) ----------------------------------------
  ex.push_back({"robust-t0-support", {"robustness"}, "T = 0: supp(h) = [0 : KML+M-2]",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto s = SymbolicSupport(SchemeParams::Mp(2, 3, 2, 0, 1)).supp_h;
                  o.Expect(s == Range(0, 13), Mismatch("supp(h)", "{0..13}", Str(s)));
                  return o;
                }});
  ex.push_back({"robust-t1-support", {"robustness"}, "T = 1: supp(h) = {0..20,24}, supp(hhat) = {2,5,...,20}",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 1, 1);
                  const auto s = SymbolicSupport(prm);
                  const auto want = Concat(Range(0, 20), {24});
                  o.Expect(s.supp_h == want, Mismatch("supp(h)", Str(want), Str(s.supp_h)));
                  const std::vector<Exponent> hat = {2, 5, 8, 11, 14, 17, 20};
                  o.Expect(s.supp_hhat == hat, Mismatch("supp(hhat)", Str(hat), Str(s.supp_hhat)));
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(MakeField(kMersenne61, 1), 2, 3, 2, 1, 1, 1, rng);
                  const auto h = Support(PolyMul(BuildF(in, prm, DrawMasksA(in, 1, rng)), BuildG(in, prm, DrawMasksB(in, 1, rng))));
                  o.Expect(h == want, Mismatch("supp(h) of a random product", Str(want), Str(h)));
                  return o;
                }});
  ex.push_back({"robust-t2-support", {"robustness"}, "T = 2: supp(h) = {0..21,24,25,26}",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto s = SymbolicSupport(SchemeParams::Mp(2, 3, 2, 2, 1)).supp_h;
                  const auto want = Concat(Range(0, 21), {24, 25, 26});
                  o.Expect(s == want, Mismatch("supp(h)", Str(want), Str(s)));
                  return o;
                }});
  ex.push_back({"robust-t0-plan", {"robustness"}, "T = 0 over GF(31): a_p = 15^p, p = 0..5 passes all checks",
                [](const ExampleOptions&) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 0, 1);
                  const auto plan = T0Plan();
                  o.Expect(NecessaryConditionsHold(plan), "necessary conditions fail");
                  o.Expect(DecodabilityCheck(plan, SymbolicSupport(prm).supp_hhat), "GV(a, supp(hhat)) singular");
                  o.Expect(SecurityCheck(plan, prm), "security check fails");
                  return o;
                }});
  ex.push_back({"robust-p4", {"robustness"}, "p(4) = 1: every 4 stragglers out of 18 are tolerated",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const auto est = POfSEmpirical(SchemeParams::Mp(2, 3, 2, 0, 1), T0Plan(), 4, true, 0, opt.seed);
                  o.Expect(est.successes == est.trials && est.trials == 3060,
                           Mismatch("decodable sets", "3060/3060", std::to_string(est.successes) + "/" + std::to_string(est.trials)));
                  o.Expect(POfSLowerBound(2, 3, 2, 6, 4) == Rational(1, 1), "bound at S = N-(KML+M-1) is not 1");
                  return o;
                }});
  const auto p_of_s = [](u64 s, Rational bound, const char* rounded) {
    return [=](const ExampleOptions& opt) {
      Outcome o;
      const Rational b = POfSLowerBound(2, 3, 2, 6, s);
      o.Expect(b == bound, Mismatch("bound", bound.ToString(), b.ToString()));
      char buf[16];
      std::snprintf(buf, sizeof(buf), "%.4f", b.ToDouble());
      o.Expect(std::string(buf) == rounded, Mismatch("bound to 4 places", rounded, buf));
      const auto est = POfSEmpirical(SchemeParams::Mp(2, 3, 2, 0, 1), T0Plan(), s, true, 0, opt.seed);
      o.Expect(!(est.fraction() < bound),
               Mismatch("exhaustive p(S)", ">= " + bound.ToString(), est.fraction().ToString()));
      return o;
    };
  };
  ex.push_back({"robust-p5", {"robustness"}, "p(5) >= 90/8568 = 0.0105", p_of_s(5, Rational(90, 8568), "0.0105")});
  ex.push_back({"robust-p6", {"robustness"}, "p(6) >= 15/18564 = 0.0008", p_of_s(6, Rational(15, 18564), "0.0008")});
  ex.push_back({"robust-t0-threshold", {"robustness"}, "T = 0: any 14 = KML+M-1 of 18 workers decode, 13 do not",
                [](const ExampleOptions&) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 0, 1);
                  const auto plan = T0Plan();
                  const auto sup = SymbolicSupport(prm);
                  u64 bad14 = 0, bad13 = 0;
                  ForEachCombination(18, 14, [&](const std::vector<std::size_t>& s) {
                    bad14 += SurvivorsDecode(plan, prm, sup, s) ? 0 : 1;
                    return true;
                  });
                  ForEachCombination(18, 13, [&](const std::vector<std::size_t>& s) {
                    bad13 += SurvivorsDecode(plan, prm, sup, s) ? 0 : 1;
                    return true;
                  });
                  o.Expect(bad14 == 0, Mismatch("non-decodable 14-sets", 0, bad14));
                  o.Expect(bad13 > 0, "every 13-set decodes");
                  WitnessSearchOptions wo;
                  wo.enabled = false;
                  const auto rep = MpRecoveryThresholdWithSecurity(prm, plan, wo);
                  o.Expect(rep.threshold == 14, Mismatch("reported threshold", 14, rep.threshold));
                  return o;
                }});
  ex.push_back({"robust-t1-security", {"robustness"}, "T = 1: security reduces to non-zero evaluation points",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto plan = T1Plan();
                  o.Expect(SecurityCheck(plan, SchemeParams::Mp(2, 3, 2, 1, 1)), "security check fails");
                  const Field f = plan.field;
                  const auto zero = EvaluationPlan::ModM(f, plan.zeta, 3, {f->FromInt(1), f->Zero()});
                  try {
                    SecurityCheck(zero, SchemeParams::Mp(2, 3, 2, 1, 1));
                    o.Expect(false, "plan with a zero point accepted");
                  } catch (const Error& e) {
                    o.Expect(e.code() == ErrorCode::kZeroEvaluationPoint, e.what());
                  }
                  return o;
                }});
  ex.push_back({"robust-t1-sizes", {"robustness"}, "T = 1: N' = 22 and P' = 6",
                [](const ExampleOptions&) {
                  Outcome o;
                  const auto s = SymbolicSupport(SchemeParams::Mp(2, 3, 2, 1, 1));
                  o.Expect(s.supp_h.size() == 22, Mismatch("N'", 22, s.supp_h.size()));
                  o.Expect(s.supp_hhat.size() == 6, Mismatch("P' = |supp(hhat)|", 6, s.supp_hhat.size()));
                  return o;
                }});
  ex.push_back({"robust-t1-any-22", {"robustness"}, "T = 1, 24 workers over GF(31): every 22 survivors decode",
                [](const ExampleOptions&) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 1, 1);
                  const auto plan = T1Plan();
                  const auto sup = SymbolicSupport(prm);
                  u64 bad = 0, total = 0;
                  ForEachCombination(24, 22, [&](const std::vector<std::size_t>& s) {
                    ++total;
                    bad += SurvivorsDecode(plan, prm, sup, s) ? 0 : 1;
                    return true;
                  });
                  o.Expect(total == 276 && bad == 0, Mismatch("non-decodable 22-sets", "0 of 276",
                                                              std::to_string(bad) + " of " + std::to_string(total)));
                  return o;
                }});
  ex.push_back({"robust-t1-hypernodes", {"robustness"}, "T = 1: any 18 workers forming 6 complete hypernodes decode",
                [](const ExampleOptions&) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 1, 1);
                  const auto plan = T1Plan();
                  const auto sup = SymbolicSupport(prm);
                  u64 good = 0, total = 0;
                  ForEachCombination(8, 6, [&](const std::vector<std::size_t>& nodes) {
                    std::vector<std::size_t> s;
                    for (std::size_t p : nodes) {
                      for (std::size_t w : plan.HypernodeWorkers(p)) s.push_back(w);
                    }
                    ++total;
                    good += SurvivorsDecode(plan, prm, sup, s) ? 1 : 0;
                    return true;
                  });
                  o.Expect(good == total, Mismatch("decodable 6-hypernode sets", std::to_string(total) + " of " + std::to_string(total),
                                                   std::to_string(good) + " of " + std::to_string(total)));
                  return o;
                }});
  ex.push_back({"robust-t2-security", {"robustness"}, "T = 2 over GF(61), zeta = 47, a_p = 8^e: secure",
                [](const ExampleOptions&) {
                  Outcome o;
                  o.Expect(SecurityCheck(T2Plan(), SchemeParams::Mp(2, 3, 2, 2, 1)), "security check fails");
                  return o;
                }});
  ex.push_back({"robust-t2-threshold", {"robustness"}, "T = 2: recovery threshold 25 = N', below the bound 28",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  WitnessSearchOptions wo;
                  wo.exhaustive = opt.full;
                  wo.seed = opt.seed;
                  const auto rep = MpRecoveryThresholdWithSecurity(SchemeParams::Mp(2, 3, 2, 2, 1), T2Plan(), wo);
                  o.Expect(rep.n_prime == 25, Mismatch("N'", 25, rep.n_prime));
                  o.Expect(rep.bound == 28, Mismatch("bound N-(P-P')", 28, rep.bound));
                  o.Expect(rep.threshold == 25,
                           Mismatch("threshold", 25, std::to_string(rep.threshold) + " (" + rep.evidence + ")"));
                  return o;
                }});
  ex.push_back({"robust-gapless", {"robustness"}, "T >= 3: supp(h) has no gaps",
                [](const ExampleOptions&) {
                  Outcome o;
                  for (u64 t = 3; t <= 6; ++t) {
                    const auto s = SymbolicSupport(SchemeParams::Mp(2, 3, 2, t, 1)).supp_h;
                    std::vector<Exponent> gaps;
                    for (Exponent e = 0; e < s.back(); ++e) {
                      if (!std::binary_search(s.begin(), s.end(), e)) gaps.push_back(e);
                    }
                    o.Expect(gaps.empty(), "gap in supp(h) at T=" + std::to_string(t) + ": missing " + Str(gaps));
                  }
                  return o;
                }});
  ex.push_back({"robust-gapless-threshold", {"robustness"}, "gapless supp(h) (T = 4): the recovery threshold is N' = 31",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  // T = 4 is gapless with N' = 31; 14 hypernodes put N - (P - P') above it.
                  const SchemeParams prm = SchemeParams::Mp(2, 3, 2, 4, 1);
                  EvalSearchOptions so;
                  so.seed = opt.seed;
                  so.points = 14;
                  const auto plan = FindEvaluationVector(prm, MakeFieldWithModulus(13, {2, 12, 1}), so).plan;
                  const auto rep = MpRecoveryThresholdWithSecurity(prm, plan);
                  o.Expect(rep.gapless && rep.n_prime == 31 && rep.threshold == 31,
                           Mismatch("threshold", 31, rep.threshold));
                  return o;
                }});
  ex.push_back({"robust-below-threshold", {"robustness"}, "N'-1 survivors cannot decode a full-interpolation code",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  const SchemeParams prm = SchemeParams::Ggasp(2, 3, 2, 1, 1);
                  EvalSearchOptions so;
                  so.seed = opt.seed;
                  const auto plan = FindEvaluationVector(prm, MakeField(kMersenne61, 1), so).plan;
                  Rng rng(opt.seed);
                  const auto in = PartitionedInput::Random(plan.field, 2, 3, 2, 1, 1, 1, rng);
                  const SimReport rep = RunProtocol(in, prm, plan, {0}, opt.seed);
                  o.Expect(!rep.decode_success && rep.failure.find("InsufficientResponses") != std::string::npos,
                           Mismatch("outcome", "InsufficientResponses", rep.decode_success ? "success" : rep.failure));
                  return o;
                }});

  // --- Rate comparisons -----------------------------------------------------
  ex.push_back({"rate-sweep", {"sweep"}, "K=L=2, M=10 sweep has an MP and a GGASP row per T; MP rate 1 at T=0",
                [](const ExampleOptions& opt) {
                  Outcome o;
                  SweepGrid grid{{2}, {10}, {2}, 0, 40, true, true};
                  const auto rows = RateSweep(grid);
                  o.Expect(rows.size() == 82, Mismatch("rows", 82, rows.size()));
                  for (const SweepRow& r : rows) {
                    if (r.scheme == "mp") {
                      const u64 n = MpThresholdClosedForm(2, 10, 2, r.t, 1, opt.l0_offset).n;
                      o.Expect(r.report.n == n, Mismatch("MP N at T=" + std::to_string(r.t), n, r.report.n));
                    } else if (r.t > 0) {
                      const u64 n = OptimalGgaspR(2, 10, 2, r.t).n;
                      o.Expect(r.report.n == n, Mismatch("GGASP N at T=" + std::to_string(r.t), n, r.report.n));
                    }
                  }
                  o.Expect(!rows.empty() && rows[0].scheme == "mp" && rows[0].report.rate == Rational(1, 1),
                           "MP rate at T = 0 is not 1");
                  return o;
                }});
  ex.push_back({"fixed-n-search", {"sweep"}, "N = 200 with K, L >= 2, M >= 4: best partitions per T fit in 200 workers",
                [](const ExampleOptions&) {
                  Outcome o;
                  FixedNQuery q;
                  q.n = 200;
                  q.k_min = 2;
                  q.m_min = 4;
                  q.l_min = 2;
                  q.t_min = 1;
                  q.t_max = 30;
                  const auto rows = FixedNSearch(q);
                  o.Expect(rows.size() == 60, Mismatch("rows", 60, rows.size()));
                  for (const SweepRow& r : rows) {
                    if (!r.feasible) continue;
                    o.Expect(r.report.n <= 200, "N above 200 at T=" + std::to_string(r.t));
                    // Independent brute force for the best rate.
                    Rational best(0, 1);
                    for (u64 k = 2; k <= 50; ++k) {
                      for (u64 m = 4; k * m * 2 <= 200; ++m) {
                        for (u64 l = 2; k * m * l <= 200; ++l) {
                          const u64 n = r.scheme == "mp" ? MpThresholdClosedForm(k, m, l, r.t, 1).n
                                                         : OptimalGgaspR(k, m, l, r.t).n;
                          if (n <= 200 && best < Rational(k * m * l, n)) best = Rational(k * m * l, n);
                        }
                      }
                    }
                    o.Expect(r.report.rate == best, Mismatch(r.scheme + " best rate at T=" + std::to_string(r.t),
                                                             best.ToString(), r.report.rate.ToString()));
                  }
                  return o;
                }});
  return ex;
}

bool Selected(const Example& e, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const std::string& want : only) {
    if (want == e.id || std::find(e.tags.begin(), e.tags.end(), want) != e.tags.end()) return true;
  }
  return false;
}

}  // namespace

std::vector<ExampleResult> RunExamples(const ExampleOptions& options) {
  std::vector<ExampleResult> out;
  for (const Example& e : BuildExamples()) {
    if (!Selected(e, options.only)) continue;
    ExampleResult r{e.id, e.tags, e.description, false, ""};
    try {
      const Outcome o = e.body(options);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> ExampleTags() {
  std::set<std::string> tags;
  for (const Example& e : BuildExamples()) tags.insert(e.tags.begin(), e.tags.end());
  return {tags.begin(), tags.end()};
}

}  // namespace mpcodes::cli
