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

#ifndef MPCODES_TOOLS_COMMANDS_HPP_
#define MPCODES_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "mpcodes/error.hpp"
#include "run_config.hpp"

namespace mpcodes::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitBadConfig = 2,
  kExitBudget = 3,
};

struct OptionInfo {
  std::string name;  // long flag without dashes; also the config key
  std::string help;
  bool flag = false;
};

struct CommandInfo {
  std::string name;
  std::string help;
  std::vector<OptionInfo> options;  // beyond the common ones
};

// Every subcommand with its specific options. Common to all: scheme, field,
// format, seed, budget, output, config.
const std::vector<CommandInfo>& Commands();
const CommandInfo* FindCommand(const std::string& name);

// Runs config.subcommand, writing the result to config.output (or `out`).
// Library errors propagate; see ExitCodeFor.
int RunCommand(const RunConfig& config, std::ostream& out, std::ostream& err);

int ExitCodeFor(ErrorCode code);

}  // namespace mpcodes::cli

#endif  // MPCODES_TOOLS_COMMANDS_HPP_
