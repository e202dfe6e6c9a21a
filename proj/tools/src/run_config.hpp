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

#ifndef MPCODES_TOOLS_RUN_CONFIG_HPP_
#define MPCODES_TOOLS_RUN_CONFIG_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mpcodes/numtheory.hpp"

namespace mpcodes::cli {

// One invocation of the tool. Config files use the same keys as the long
// flags, one `key = value` per line; `#` starts a comment line.
struct RunConfig {
  std::string subcommand;
  std::string scheme;
  std::string field;
  std::string format;  // empty: the subcommand's default
  u64 seed = 1;
  u64 budget = 0;      // 0: the subcommand's default cap
  std::string output;  // empty: stdout
  std::map<std::string, std::string> options;  // subcommand-specific keys

  bool Has(const std::string& key) const { return options.count(key) != 0; }
  std::string Get(const std::string& key, const std::string& fallback = "") const;
  u64 GetU64(const std::string& key, u64 fallback) const;
  std::int64_t GetI64(const std::string& key, std::int64_t fallback) const;
  double GetDouble(const std::string& key, double fallback) const;
  bool GetBool(const std::string& key) const;

  // Assigns a core field when `key` names one, an option otherwise.
  void Set(const std::string& key, const std::string& value);

  bool operator==(const RunConfig&) const = default;
};

// Errors: kParseError (malformed line, bad number, bad scheme spec).
RunConfig ParseRunConfig(std::string_view text);

// Canonical text: core keys in a fixed order, then options sorted by key;
// unset core fields are omitted. Scheme specs are normalized.
std::string SerializeRunConfig(const RunConfig& config);

// serialize(parse(text)).
std::string CanonicalRunConfig(std::string_view text);

// Hash of the canonical form without the output path, so the same run
// written to two files carries the same hash.
u64 ConfigHash(const RunConfig& config);

// "2-4,7" -> {2, 3, 4, 7}. Errors: kParseError.
std::vector<u64> ParseU64List(std::string_view text);

// Canonical scheme text; keeps a literal "r=opt" for GGASP.
std::string NormalizeSchemeSpec(std::string_view spec);

}  // namespace mpcodes::cli

#endif  // MPCODES_TOOLS_RUN_CONFIG_HPP_
