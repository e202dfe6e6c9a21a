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

#include "mpcodes/linalg_checks.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mpcodes/error.hpp"
#include "mpcodes/linalg.hpp"
#include "mpcodes/thresholds.hpp"

namespace mpcodes {

BlockMatrix GeneralizedVandermonde(const Field& field, std::span<const FieldElement> points,
                                   std::span<const Exponent> exponents) {
  return EvaluationMatrix(field, points, exponents).Transposed();
}

MdsResult CheckMds(const BlockMatrix& matrix, const MdsOptions& options) {
  const std::size_t p = matrix.rows();
  const std::size_t n = matrix.cols();
  if (p > n) {
    throw Error(ErrorCode::kShapeMismatch,
                "MDS check needs rows <= cols, got " + std::to_string(p) + "x" + std::to_string(n));
  }
  MdsResult result;
  const auto minor_ok = [&](const std::vector<std::size_t>& cols) {
    ++result.minors_checked;
    if (!Determinant(matrix.SelectColumns(cols)).is_zero()) return true;
    result.mds = false;
    result.witness = cols;
    return false;
  };
  if (options.spot_check) {
    result.exhaustive = false;
    Rng rng(options.seed);
    for (u64 i = 0; i < options.samples; ++i) {
      if (!minor_ok(RandomSubset(n, p, rng))) break;
    }
    return result;
  }
  u128 total = 0;
  try {
    total = Binomial(n, p);
  } catch (const Error&) {
    total = ~u128{0};
  }
  if (total > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded, "C(" + std::to_string(n) + ", " + std::to_string(p) +
                                                ") = " + U128ToString(total) +
                                                " minors exceed the budget of " +
                                                std::to_string(options.budget));
  }
  ForEachCombination(n, p, minor_ok);
  return result;
}

bool IsMds(const BlockMatrix& matrix, u64 budget) {
  MdsOptions options;
  options.budget = budget;
  return CheckMds(matrix, options).mds;
}

bool DecodabilityCheck(const EvaluationPlan& plan, std::span<const Exponent> support,
                       u64 budget) {
  const std::vector<FieldElement>& points = plan.mod_m ? plan.a : plan.worker_points;
  if (points.size() < support.size()) return false;
  const BlockMatrix gv = GeneralizedVandermonde(plan.field, points, support);
  if (points.size() == support.size()) return !Determinant(gv).is_zero();
  return IsMds(gv, budget);
}

bool PlanDecodable(const EvaluationPlan& plan, std::span<const Exponent> support) {
  const std::vector<FieldElement>& points = plan.mod_m ? plan.a : plan.worker_points;
  if (points.size() < support.size()) return false;
  return Rank(GeneralizedVandermonde(plan.field, points, support)) == support.size();
}

SecurityMatrices BuildSecurityMatrices(const EvaluationPlan& plan, const SchemeParams& params) {
  for (std::size_t n = 0; n < plan.worker_points.size(); ++n) {
    if (plan.worker_points[n].is_zero()) {
      throw Error(ErrorCode::kZeroEvaluationPoint, "worker " + std::to_string(n) + " evaluates at 0");
    }
  }
  const std::vector<Exponent> alpha = params.alpha();
  const std::vector<Exponent> beta = params.beta();
  return {GeneralizedVandermonde(plan.field, plan.worker_points, alpha),
          GeneralizedVandermonde(plan.field, plan.worker_points, beta)};
}

SecurityResult SecurityCheckDetailed(const EvaluationPlan& plan, const SchemeParams& params,
                                     const MdsOptions& options) {
  SecurityResult out;
  if (params.t == 0) return out;
  const SecurityMatrices s = BuildSecurityMatrices(plan, params);
  out.sigma_a = CheckMds(s.sigma_a, options);
  // For MP codes alpha = beta, so Sigma_B repeats Sigma_A.
  out.sigma_b = params.alpha() == params.beta() ? out.sigma_a : CheckMds(s.sigma_b, options);
  out.secure = out.sigma_a.mds && out.sigma_b.mds;
  return out;
}

bool SecurityCheck(const EvaluationPlan& plan, const SchemeParams& params, u64 budget) {
  MdsOptions options;
  options.budget = budget;
  return SecurityCheckDetailed(plan, params, options).secure;
}

bool NecessaryConditionsHold(const EvaluationPlan& plan) {
  if (!plan.mod_m) return plan.PointsDistinct();
  std::vector<u128> powers;
  for (const FieldElement& a : plan.a) {
    if (a.is_zero()) return false;
    powers.push_back(plan.field->IndexOf(Pow(a, plan.m)));
  }
  std::sort(powers.begin(), powers.end());
  return std::adjacent_find(powers.begin(), powers.end()) == powers.end();
}

Field ExtendedField(const Field& base, int degree) {
  if (degree == base->degree()) return base;
  return MakeField(base->characteristic(), degree);
}

std::string EvalSearchDiagnostics::MostFrequentFailure() const {
  std::array<std::pair<u64, const char*>, 4> totals{{{0, "zero evaluation point"},
                                                     {0, "repeated M-th power or point"},
                                                     {0, "decodability"},
                                                     {0, "security"}}};
  for (const Degree& d : degrees) {
    totals[0].first += d.zero_point;
    totals[1].first += d.repeated_power;
    totals[2].first += d.not_decodable;
    totals[3].first += d.not_secure;
  }
  const auto it = std::max_element(totals.begin(), totals.end(),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it->first == 0) return "no candidates sampled";
  return it->second;
}

std::string EvalSearchDiagnostics::Summary() const {
  std::ostringstream os;
  for (const Degree& d : degrees) {
    os << "[GF(" << d.field << ")";
    if (!d.skipped.empty()) {
      os << " skipped: " << d.skipped << "] ";
      continue;
    }
    os << " candidates=" << d.candidates << " zero=" << d.zero_point
       << " repeated=" << d.repeated_power << " undecodable=" << d.not_decodable
       << " insecure=" << d.not_secure << "] ";
  }
  os << "most frequent failure: " << MostFrequentFailure();
  return os.str();
}

EvalSearchResult FindEvaluationVector(const SchemeParams& params, const Field& base,
                                      const EvalSearchOptions& options) {
  params.Validate();
  const SupportSets supports = SymbolicSupport(params);
  EvalSearchResult result;
  result.decode_support = params.uses_mod_m() ? supports.supp_hhat : supports.supp_h;
  const std::size_t count = options.points == 0 ? result.decode_support.size() : options.points;
  if (count < result.decode_support.size()) {
    throw Error(ErrorCode::kBadParams, std::to_string(count) + " points cannot decode " +
                                           std::to_string(result.decode_support.size()) +
                                           " coefficients");
  }
  const u64 m = params.m;
  const u128 workers = params.uses_mod_m() ? u128{m} * count : u128{count};

  const int last = options.escalate ? std::max(options.max_degree, base->degree()) : base->degree();
  for (int degree = base->degree(); degree <= last; ++degree) {
    EvalSearchDiagnostics::Degree diag;
    diag.degree = degree;
    Field field;
    try {
      field = ExtendedField(base, degree);
    } catch (const Error& e) {
      diag.field = std::to_string(base->characteristic()) + "^" + std::to_string(degree);
      diag.skipped = e.what();
      result.diagnostics.degrees.push_back(diag);
      break;
    }
    diag.field = std::to_string(field->characteristic()) + "^" + std::to_string(degree);
    const u128 q = field->order();
    if (params.uses_mod_m() && (q - 1) % m != 0) {
      diag.skipped = "no primitive " + std::to_string(m) + "-th root of unity";
      result.diagnostics.degrees.push_back(diag);
      continue;
    }
    if (q < workers + 1) {
      diag.skipped = "field order " + U128ToString(q) + " below the necessary " +
                     U128ToString(workers + 1);
      result.diagnostics.degrees.push_back(diag);
      continue;
    }
    u128 sub_order = 0;
    if (options.subgroup) {
      sub_order = CoprimePart(q - 1, m);
      if (sub_order < count) {
        diag.skipped = "subgroup of order coprime to M has only " + U128ToString(sub_order) +
                       " elements";
        result.diagnostics.degrees.push_back(diag);
        continue;
      }
    }
    const FieldElement zeta = params.uses_mod_m() ? PrimitiveRootOfUnity(field, m) : field->One();
    Rng rng(options.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<u64>(degree)));
    const int steps = degree - base->degree();
    const u64 budget = options.budget << std::min(steps, 32);
    for (u64 c = 0; c < budget; ++c) {
      ++diag.candidates;
      std::vector<FieldElement> pts;
      pts.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        FieldElement x = field->RandomNonzero(rng);
        if (options.subgroup) x = Pow(x, (q - 1) / sub_order);
        pts.push_back(x);
      }
      EvaluationPlan plan = params.uses_mod_m() ? EvaluationPlan::ModM(field, zeta, m, pts)
                                                : EvaluationPlan::Direct(field, pts);
      plan.seed = options.seed;
      if (std::any_of(pts.begin(), pts.end(), [](const FieldElement& x) { return x.is_zero(); })) {
        ++diag.zero_point;
        continue;
      }
      if (!NecessaryConditionsHold(plan) || !plan.PointsDistinct()) {
        ++diag.repeated_power;
        continue;
      }
      if (!DecodabilityCheck(plan, result.decode_support, options.mds_budget)) {
        ++diag.not_decodable;
        continue;
      }
      if (!SecurityCheck(plan, params, options.mds_budget)) {
        ++diag.not_secure;
        continue;
      }
      result.diagnostics.degrees.push_back(diag);
      result.plan = std::move(plan);
      return result;
    }
    result.diagnostics.degrees.push_back(diag);
  }
  throw Error(ErrorCode::kBudgetExhausted,
              "no admissible evaluation vector for " + FormatSchemeSpec(params) + ": " +
                  result.diagnostics.Summary());
}

}  // namespace mpcodes
