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

#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mpcodes/code_schemes.hpp"
#include "mpcodes/error.hpp"

namespace mpcodes::cli {

namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <class T>
T ParseNumber(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError,
                "'" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string RunConfig::Get(const std::string& key, const std::string& fallback) const {
  const auto it = options.find(key);
  return it == options.end() ? fallback : it->second;
}

u64 RunConfig::GetU64(const std::string& key, u64 fallback) const {
  const auto it = options.find(key);
  return it == options.end() ? fallback : ParseNumber<u64>(key, it->second);
}

std::int64_t RunConfig::GetI64(const std::string& key, std::int64_t fallback) const {
  const auto it = options.find(key);
  return it == options.end() ? fallback : ParseNumber<std::int64_t>(key, it->second);
}

double RunConfig::GetDouble(const std::string& key, double fallback) const {
  const auto it = options.find(key);
  if (it == options.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used == it->second.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kParseError, "'" + key + "' expects a number, got '" + it->second + "'");
}

bool RunConfig::GetBool(const std::string& key) const {
  const auto it = options.find(key);
  if (it == options.end()) return false;
  if (it->second == "true" || it->second == "1" || it->second.empty()) return true;
  if (it->second == "false" || it->second == "0") return false;
  throw Error(ErrorCode::kParseError, "'" + key + "' expects true or false, got '" + it->second + "'");
}

void RunConfig::Set(const std::string& key, const std::string& value) {
  if (key == "subcommand") {
    subcommand = value;
  } else if (key == "scheme") {
    scheme = value.empty() ? value : NormalizeSchemeSpec(value);
  } else if (key == "field") {
    field = value;
  } else if (key == "format") {
    format = value;
  } else if (key == "seed") {
    seed = ParseNumber<u64>(key, value);
  } else if (key == "budget") {
    budget = ParseNumber<u64>(key, value);
  } else if (key == "output") {
    output = value;
  } else {
    options[key] = value;
  }
}

RunConfig ParseRunConfig(std::string_view text) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = Trim(std::string_view(t).substr(0, eq));
    std::string value = Trim(std::string_view(t).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) + ": empty key");
    try {
      config.Set(key, value);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return config;
}

std::string SerializeRunConfig(const RunConfig& c) {
  std::ostringstream os;
  if (!c.subcommand.empty()) os << "subcommand=" << c.subcommand << '\n';
  if (!c.scheme.empty()) os << "scheme=" << c.scheme << '\n';
  if (!c.field.empty()) os << "field=" << c.field << '\n';
  if (!c.format.empty()) os << "format=" << c.format << '\n';
  os << "seed=" << c.seed << '\n';
  if (c.budget != 0) os << "budget=" << c.budget << '\n';
  if (!c.output.empty()) os << "output=" << c.output << '\n';
  for (const auto& [k, v] : c.options) os << k << '=' << v << '\n';
  return os.str();
}

std::string CanonicalRunConfig(std::string_view text) { return SerializeRunConfig(ParseRunConfig(text)); }

u64 ConfigHash(const RunConfig& config) {
  RunConfig c = config;
  c.output.clear();
  return Fnv1a64(SerializeRunConfig(c));
}

std::vector<u64> ParseU64List(std::string_view text) {
  std::vector<u64> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string item = Trim(text.substr(pos, comma - pos));
    if (item.empty()) throw Error(ErrorCode::kParseError, "empty item in list '" + std::string(text) + "'");
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(ParseNumber<u64>("list", item));
    } else {
      const u64 lo = ParseNumber<u64>("list", Trim(std::string_view(item).substr(0, dash)));
      const u64 hi = ParseNumber<u64>("list", Trim(std::string_view(item).substr(dash + 1)));
      if (hi < lo) throw Error(ErrorCode::kParseError, "descending range '" + item + "'");
      for (u64 v = lo; v <= hi; ++v) out.push_back(v);
    }
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string NormalizeSchemeSpec(std::string_view spec) {
  std::string s(spec);
  const auto opt = s.find("r=opt");
  if (opt == std::string::npos) return FormatSchemeSpec(ParseSchemeSpec(s));
  s.replace(opt, 5, "r=1");
  std::string canon = FormatSchemeSpec(ParseSchemeSpec(s));
  const auto r = canon.find("r=1");
  return canon.replace(r, 3, "r=opt");
}

}  // namespace mpcodes::cli
