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

#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mpcodes/code_schemes.hpp"
#include "mpcodes/evaluation_plan.hpp"
#include "mpcodes/finite_field.hpp"
#include "mpcodes/linalg_checks.hpp"
#include "mpcodes/sdmm_protocol.hpp"
#include "mpcodes/serialization.hpp"
#include "mpcodes/thresholds.hpp"
#include "mpcodes/version.hpp"
#include "verify_examples.hpp"

namespace mpcodes::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kDefaultField = "2305843009213693951";  // 2^61 - 1
constexpr u64 kInputSalt = 0x696e707574ULL;
constexpr u64 kStragglerSalt = 0x7374726167ULL;

const char* kCsvHeader = "scheme,K,M,L,T,D_or_r,N,P,rate\n";

std::string Hex(u64 v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string Decimal(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", r.ToDouble());
  return buf;
}

std::string CsvPreamble(const RunConfig& c) {
  return std::string("# mpcodes ") + kVersion + "\n# seed=" + std::to_string(c.seed) +
         "\n# config_hash=" + Hex(ConfigHash(c)) + "\n";
}

std::string FormatOr(const RunConfig& c, const std::string& fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json" && f != "text") {
    throw Error(ErrorCode::kParseError, "unknown format '" + f + "' (csv, json or text)");
  }
  return f;
}

void Emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open '" + c.output + "' for writing");
  file << text;
  if (!file) throw Error(ErrorCode::kIoError, "write to '" + c.output + "' failed");
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) return out;
    pos = next + 1;
  }
}

// "ggasp:...,r=opt" resolves to the threshold-minimizing r.
SchemeParams ResolveScheme(const RunConfig& c, bool* optimized = nullptr) {
  if (c.scheme.empty()) throw Error(ErrorCode::kParseError, "missing --scheme");
  std::string s = c.scheme;
  const auto opt = s.find("r=opt");
  if (optimized != nullptr) *optimized = opt != std::string::npos;
  if (opt == std::string::npos) return ParseSchemeSpec(s);
  s.replace(opt, 5, "r=1");
  const SchemeParams base = ParseSchemeSpec(s);
  if (base.t == 0) return base;
  return SchemeParams::Ggasp(base.k, base.m, base.l, base.t,
                             OptimalGgaspR(base.k, base.m, base.l, base.t).r);
}

Field ResolveField(const RunConfig& c) { return ParseFieldSpec(c.field.empty() ? kDefaultField : c.field); }

// Items are elements ("3", "1,2") or "g^[list]" expanding to g^e per e.
std::vector<FieldElement> ParsePoints(const Field& field, const std::string& text) {
  std::vector<FieldElement> out;
  for (const std::string& item : Split(text, ';')) {
    const auto caret = item.find('^');
    if (caret == std::string::npos) {
      out.push_back(ParseElement(field, item));
      continue;
    }
    const FieldElement g = ParseElement(field, item.substr(0, caret));
    std::string exps = item.substr(caret + 1);
    if (exps.size() >= 2 && exps.front() == '[' && exps.back() == ']') exps = exps.substr(1, exps.size() - 2);
    for (u64 e : ParseU64List(exps)) out.push_back(Pow(g, e));
  }
  return out;
}

EvaluationPlan ResolvePlan(const RunConfig& c, const SchemeParams& params, const Field& field) {
  if (c.Has("plan")) return PlanFromJson(ReadFile(c.Get("plan")));
  if (c.Has("a")) {
    std::vector<FieldElement> a = ParsePoints(field, c.Get("a"));
    if (!params.uses_mod_m()) return EvaluationPlan::Direct(field, std::move(a));
    const FieldElement zeta =
        c.Has("zeta") ? ParseElement(field, c.Get("zeta")) : PrimitiveRootOfUnity(field, params.m);
    return EvaluationPlan::ModM(field, zeta, params.m, std::move(a));
  }
  EvalSearchOptions opts;
  opts.seed = c.seed;
  if (c.budget != 0) opts.budget = c.budget;
  opts.points = c.GetU64("points", 0);
  return FindEvaluationVector(params, field, opts).plan;
}

std::string CsvRow(const SweepRow& row) {
  const ThresholdReport& r = row.report;
  std::ostringstream os;
  if (!row.feasible) {
    os << row.scheme << ",,,," << row.t << ",,,,\n";
    return os.str();
  }
  os << row.scheme << ',' << r.params.k << ',' << r.params.m << ',' << r.params.l << ',' << row.t << ',';
  os << (row.scheme == "mp" ? r.params.d() : r.params.r()) << ',' << r.n << ',';
  if (r.params.uses_mod_m()) os << r.p;
  os << ',' << Decimal(r.rate) << '\n';
  return os.str();
}

json RowJson(const SweepRow& row) {
  json j;
  j["scheme"] = row.scheme;
  j["T"] = row.t;
  j["feasible"] = row.feasible;
  if (row.feasible) {
    const ThresholdReport& r = row.report;
    j["K"] = r.params.k;
    j["M"] = r.params.m;
    j["L"] = r.params.l;
    j[row.scheme == "mp" ? "D" : "r"] = row.scheme == "mp" ? r.params.d() : r.params.r();
    j["N"] = r.n;
    if (r.params.uses_mod_m()) j["P"] = r.p;
    j["rate"] = r.rate.ToString();
    j["rate_decimal"] = r.rate.ToDouble();
  }
  return j;
}

std::string RenderRows(const RunConfig& c, const std::vector<SweepRow>& rows, const std::string& fmt) {
  if (fmt == "json") {
    json j;
    j["version"] = kVersion;
    j["seed"] = c.seed;
    j["config_hash"] = Hex(ConfigHash(c));
    j["rows"] = json::array();
    for (const SweepRow& row : rows) j["rows"].push_back(RowJson(row));
    return j.dump(2) + "\n";
  }
  std::string text = CsvPreamble(c) + kCsvHeader;
  for (const SweepRow& row : rows) text += CsvRow(row);
  return text;
}

void ParseSchemes(const RunConfig& c, bool& mp, bool& ggasp) {
  mp = ggasp = false;
  for (const std::string& s : Split(c.Get("schemes", "mp,ggasp"), ',')) {
    if (s == "mp") {
      mp = true;
    } else if (s == "ggasp") {
      ggasp = true;
    } else {
      throw Error(ErrorCode::kParseError, "unknown scheme '" + s + "' in --schemes");
    }
  }
}

// ---------------------------------------------------------------------------

int CmdThreshold(const RunConfig& c, std::ostream& out, std::ostream& err) {
  bool optimized = false;
  const SchemeParams params = ResolveScheme(c, &optimized);
  const ThresholdReport rep = Threshold(params);
  const ThresholdReport oracle = ThresholdFromSupport(params);
  const std::string fmt = FormatOr(c, "csv");
  if (fmt == "json") {
    json j = json::parse(ThresholdReportToJson(rep));
    j["oracle_N"] = oracle.n;
    if (optimized) j["optimal_r"] = true;
    Emit(c, out, j.dump(2) + "\n");
  } else {
    SweepRow row{params.kind() == SchemeKind::kGgasp ? "ggasp" : "mp", params.t, true, rep};
    if (params.kind() == SchemeKind::kCustom) {
      throw Error(ErrorCode::kParseError, "custom schemes have no CSV row; use --format json");
    }
    Emit(c, out, CsvPreamble(c) + kCsvHeader + CsvRow(row));
  }
  if (rep.n != oracle.n) {
    err << "closed form N=" << rep.n << " disagrees with the support oracle N=" << oracle.n << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int CmdSweep(const RunConfig& c, std::ostream& out, std::ostream&) {
  SweepGrid grid;
  grid.ks = ParseU64List(c.Get("k", "2"));
  grid.ms = ParseU64List(c.Get("m", "2"));
  grid.ls = ParseU64List(c.Get("l", "2"));
  grid.t_min = c.GetU64("t-min", 0);
  grid.t_max = c.GetU64("t-max", 0);
  ParseSchemes(c, grid.mp, grid.ggasp);
  Emit(c, out, RenderRows(c, RateSweep(grid), FormatOr(c, "csv")));
  return kExitOk;
}

int CmdFixedN(const RunConfig& c, std::ostream& out, std::ostream&) {
  FixedNQuery q;
  q.n = c.GetU64("n", 200);
  q.k_min = c.GetU64("k-min", 1);
  q.m_min = c.GetU64("m-min", 1);
  q.l_min = c.GetU64("l-min", 1);
  q.t_min = c.GetU64("t-min", 0);
  q.t_max = c.GetU64("t-max", 0);
  ParseSchemes(c, q.mp, q.ggasp);
  Emit(c, out, RenderRows(c, FixedNSearch(q), FormatOr(c, "csv")));
  return kExitOk;
}

int CmdFindEval(const RunConfig& c, std::ostream& out, std::ostream&) {
  const SchemeParams params = ResolveScheme(c);
  const Field field = ResolveField(c);
  EvalSearchOptions opts;
  opts.seed = c.seed;
  if (c.budget != 0) opts.budget = c.budget;
  opts.max_degree = static_cast<int>(c.GetU64("max-degree", 6));
  opts.escalate = !c.GetBool("no-escalate");
  opts.subgroup = c.GetBool("subgroup");
  opts.points = c.GetU64("points", 0);
  const EvalSearchResult res = FindEvaluationVector(params, field, opts);

  json j;
  j["scheme"] = FormatSchemeSpec(params);
  j["seed"] = c.seed;
  j["plan"] = json::parse(PlanToJson(res.plan));
  json checks;
  checks["decodable"] = DecodabilityCheck(res.plan, res.decode_support, opts.mds_budget);
  checks["secure"] = SecurityCheck(res.plan, params, opts.mds_budget);
  if (res.plan.mod_m) checks["necessary_conditions"] = NecessaryConditionsHold(res.plan);
  j["checks"] = checks;
  j["decode_support"] = res.decode_support;
  json search = json::array();
  for (const auto& d : res.diagnostics.degrees) {
    json e;
    e["degree"] = d.degree;
    e["field"] = d.field;
    if (!d.skipped.empty()) e["skipped"] = d.skipped;
    e["candidates"] = d.candidates;
    e["zero_point"] = d.zero_point;
    e["repeated_power"] = d.repeated_power;
    e["not_decodable"] = d.not_decodable;
    e["not_secure"] = d.not_secure;
    search.push_back(e);
  }
  j["search"] = search;
  Emit(c, out, j.dump(2) + "\n");
  return kExitOk;
}

int CmdSimulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SchemeParams params = ResolveScheme(c);
  const Field field = ResolveField(c);
  const EvaluationPlan plan = ResolvePlan(c, params, field);

  PartitionedInput input;
  if (c.Has("matrix-a") || c.Has("matrix-b")) {
    const BlockMatrix a = MatrixFromText(ReadFile(c.Get("matrix-a")));
    const BlockMatrix b = MatrixFromText(ReadFile(c.Get("matrix-b")));
    if (!(a.field() == plan.field) || !(b.field() == plan.field)) {
      throw Error(ErrorCode::kFieldMismatch, "input matrices are over " + a.field()->Spec() + " but the plan is over " +
                                                 plan.field->Spec() + " (choose a field with a primitive M-th root of unity)");
    }
    input = PartitionedInput::FromMatrices(a, b, params.k, params.m, params.l);
  } else {
    Rng rng(c.seed ^ kInputSalt);
    input = PartitionedInput::Random(plan.field, params.k, params.m, params.l, c.GetU64("block-rows", 2),
                                     c.GetU64("block-inner", 2), c.GetU64("block-cols", 2), rng);
  }

  Rng straggler_rng(c.seed ^ kStragglerSalt);
  const std::vector<std::size_t> stragglers =
      StragglerSpec::Parse(c.Get("stragglers", "none")).Resolve(plan.num_workers(), straggler_rng);

  SimOptions opts;
  opts.timing = c.GetBool("timing");
  opts.decode.partial = !c.GetBool("no-partial");
  const SimReport rep = RunProtocol(input, params, plan, stragglers, c.seed, opts);

  const std::string fmt = c.GetBool("json") ? "json" : FormatOr(c, "text");
  if (fmt == "json") {
    Emit(c, out, SimReportToJson(rep) + "\n");
  } else {
    std::ostringstream os;
    os << "scheme: " << rep.scheme << "\nfield: " << rep.field << "\nworkers: " << rep.num_workers
       << "\nhypernodes: " << rep.num_hypernodes << "\nzeta: " << rep.zeta << "\nstragglers:";
    for (std::size_t w : rep.straggler_set) os << ' ' << w;
    os << "\nresponses_used: " << rep.responses_used << "\ndecode_success: " << (rep.decode_success ? "true" : "false")
       << "\ndecode_path: " << rep.decode_path << '\n';
    if (!rep.failure.empty()) os << "failure: " << rep.failure << '\n';
    os << "decoded_product_hash: " << Hex(rep.decoded_product_hash) << "\nmult_counts: encode=" << rep.mult_counts.encode
       << " worker=" << rep.mult_counts.worker << " decode=" << rep.mult_counts.decode << '\n';
    if (rep.wall_time_ms) os << "wall_time_ms: " << *rep.wall_time_ms << '\n';
    Emit(c, out, os.str());
  }
  if (!rep.decode_success && rep.failure.rfind("decoded blocks differ", 0) == 0) {
    err << "decoded product does not match direct multiplication\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int CmdPOfS(const RunConfig& c, std::ostream& out, std::ostream&) {
  const SchemeParams params = ResolveScheme(c);
  if (!c.Has("s")) throw Error(ErrorCode::kParseError, "missing --s");
  const u64 s = c.GetU64("s", 0);
  const std::string mode = c.Get("mode", "exhaustive");
  if (mode != "exhaustive" && mode != "mc" && mode != "bound") {
    throw Error(ErrorCode::kParseError, "unknown mode '" + mode + "' (exhaustive, mc or bound)");
  }

  json j;
  j["scheme"] = FormatSchemeSpec(params);
  j["mode"] = mode;
  j["S"] = s;
  std::optional<Rational> bound;
  std::optional<POfSEstimate> est;
  u64 workers = 0;
  if (mode == "bound") {
    if (!params.uses_mod_m()) throw Error(ErrorCode::kBadParams, "the bound applies to mod-M codes only");
    const u64 p = c.GetU64("points", Threshold(params).p);
    workers = params.m * p;
    bound = POfSLowerBound(params.k, params.m, params.l, p, s);
  } else {
    const Field field = ResolveField(c);
    const EvaluationPlan plan = ResolvePlan(c, params, field);
    workers = plan.num_workers();
    DecodeOptions dopts;
    dopts.partial = !c.GetBool("no-partial");
    est = POfSEmpirical(params, plan, s, mode == "exhaustive", c.GetU64("trials", 1000), c.seed, dopts);
    if (plan.mod_m && s <= workers - params.kml()) {
      bound = POfSLowerBound(params.k, params.m, params.l, plan.num_hypernodes(), s);
    }
  }
  j["N"] = workers;

  const std::string fmt = FormatOr(c, "csv");
  if (fmt == "json") {
    if (est) {
      j["successes"] = est->successes;
      j["trials"] = est->trials;
      j["exhaustive"] = est->exhaustive;
      j["p"] = est->fraction().ToString();
      j["p_decimal"] = est->fraction().ToDouble();
    }
    if (bound) {
      j["bound"] = bound->ToString();
      j["bound_decimal"] = bound->ToDouble();
    }
    Emit(c, out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << CsvPreamble(c) << "mode,S,N,successes,trials,p,p_decimal,bound,bound_decimal\n";
    os << mode << ',' << s << ',' << workers << ',';
    if (est) {
      os << est->successes << ',' << est->trials << ',' << est->fraction().ToString() << ','
         << Decimal(est->fraction()) << ',';
    } else {
      os << ",,,,";
    }
    if (bound) os << bound->ToString() << ',' << Decimal(*bound);
    else os << ',';
    os << '\n';
    Emit(c, out, os.str());
  }
  return kExitOk;
}

int CmdVerifyExamples(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.GetBool("list")) {
    std::string text;
    for (const std::string& tag : ExampleTags()) text += tag + "\n";
    Emit(c, out, text);
    return kExitOk;
  }
  ExampleOptions opts;
  for (const std::string& t : Split(c.Get("only"), ',')) {
    if (!t.empty()) opts.only.push_back(t);
  }
  opts.l0_offset = c.GetI64("l0-offset", 0);
  opts.full = c.GetBool("full");
  opts.seed = c.seed;
  const std::vector<ExampleResult> results = RunExamples(opts);
  if (results.empty()) throw Error(ErrorCode::kParseError, "--only matched no examples");

  std::size_t failed = 0;
  for (const ExampleResult& r : results) failed += r.passed ? 0 : 1;
  const std::string fmt = FormatOr(c, "text");
  if (fmt == "json") {
    json j = json::array();
    for (const ExampleResult& r : results) {
      j.push_back({{"id", r.id}, {"tags", r.tags}, {"description", r.description},
                   {"passed", r.passed}, {"detail", r.detail}});
    }
    Emit(c, out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const ExampleResult& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.description;
      if (!r.detail.empty()) os << " [" << r.detail << ']';
      os << '\n';
    }
    os << (results.size() - failed) << " passed, " << failed << " failed\n";
    Emit(c, out, os.str());
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

const std::vector<CommandInfo>& Commands() {
  static const std::vector<CommandInfo> commands = {
      {"threshold", "Recovery threshold of one scheme (closed form, checked against the support oracle)", {}},
      {"sweep",
       "Thresholds and rates over a (K, M, L, T) grid",
       {{"k", "K values, e.g. 2 or 1-4 or 2,4"},
        {"m", "M values"},
        {"l", "L values"},
        {"t-min", "smallest T"},
        {"t-max", "largest T (inclusive)"},
        {"schemes", "mp, ggasp or mp,ggasp"}}},
      {"fixed-n-search",
       "Best-rate partition per T with at most N workers",
       {{"n", "available workers (default 200)"},
        {"k-min", "lower bound on K"},
        {"m-min", "lower bound on M"},
        {"l-min", "lower bound on L"},
        {"t-min", "smallest T"},
        {"t-max", "largest T (inclusive)"},
        {"schemes", "mp, ggasp or mp,ggasp"}}},
      {"find-eval",
       "Search for an evaluation vector passing decodability and security",
       {{"max-degree", "highest extension degree tried (default 6)"},
        {"no-escalate", "stay in the given field", true},
        {"subgroup", "draw points from a subgroup of order coprime to M", true},
        {"points", "hypernodes (mod-M) or workers (GGASP); default the threshold"}}},
      {"simulate",
       "Run the protocol end to end and verify the product",
       {{"stragglers", "none, 3,7, random:S or prob:f"},
        {"plan", "plan JSON written by find-eval"},
        {"a", "evaluation bases, ';'-separated; g^[0-5] expands to powers"},
        {"zeta", "primitive M-th root of unity (default: canonical)"},
        {"points", "hypernodes or workers for the plan search"},
        {"block-rows", "rows of each A block (default 2)"},
        {"block-inner", "columns of A blocks / rows of B blocks (default 2)"},
        {"block-cols", "columns of each B block (default 2)"},
        {"matrix-a", "A in matrix text format"},
        {"matrix-b", "B in matrix text format"},
        {"json", "same as --format json", true},
        {"timing", "record wall time (output no longer reproducible)", true},
        {"no-partial", "disable the block-wise linear decoder stage", true}}},
      {"p-of-s",
       "Probability that S random stragglers still allow decoding",
       {{"s", "number of stragglers"},
        {"mode", "exhaustive, mc or bound"},
        {"trials", "Monte-Carlo trials (default 1000)"},
        {"plan", "plan JSON written by find-eval"},
        {"a", "evaluation bases, ';'-separated; g^[0-5] expands to powers"},
        {"zeta", "primitive M-th root of unity (default: canonical)"},
        {"points", "hypernodes for the plan search or the bound"},
        {"no-partial", "disable the block-wise linear decoder stage", true}}},
      {"verify-examples",
       "Replay the worked examples and reference values",
       {{"only", "comma-separated tags or ids"},
        {"l0-offset", "perturb l0 in the MP closed form (mutation check)"},
        {"full", "enumerate every minor where the default samples", true},
        {"list", "print the available tags", true}}},
  };
  return commands;
}

const CommandInfo* FindCommand(const std::string& name) {
  for (const CommandInfo& c : Commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

int RunCommand(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.subcommand == "threshold") return CmdThreshold(c, out, err);
  if (c.subcommand == "sweep") return CmdSweep(c, out, err);
  if (c.subcommand == "fixed-n-search") return CmdFixedN(c, out, err);
  if (c.subcommand == "find-eval") return CmdFindEval(c, out, err);
  if (c.subcommand == "simulate") return CmdSimulate(c, out, err);
  if (c.subcommand == "p-of-s") return CmdPOfS(c, out, err);
  if (c.subcommand == "verify-examples") return CmdVerifyExamples(c, out, err);
  throw Error(ErrorCode::kParseError,
              c.subcommand.empty() ? "no subcommand given" : "unknown subcommand '" + c.subcommand + "'");
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kBudgetExhausted:
      return kExitBudget;
    default:
      return kExitBadConfig;
  }
}

}  // namespace mpcodes::cli
