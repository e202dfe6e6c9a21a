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

#ifndef MPCODES_TOOLS_CLI_HPP_
#define MPCODES_TOOLS_CLI_HPP_

#include <iosfwd>

namespace mpcodes::cli {

// Parses argv (merging an optional --config file underneath the flags) and
// runs the selected subcommand. Returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mpcodes::cli

#endif  // MPCODES_TOOLS_CLI_HPP_
