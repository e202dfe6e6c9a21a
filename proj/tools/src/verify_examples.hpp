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

#ifndef MPCODES_TOOLS_VERIFY_EXAMPLES_HPP_
#define MPCODES_TOOLS_VERIFY_EXAMPLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mpcodes/numtheory.hpp"

namespace mpcodes::cli {

struct ExampleOptions {
  std::vector<std::string> only;  // tags or ids; empty runs everything
  std::int64_t l0_offset = 0;     // mutation hook forwarded to the MP closed form
  bool full = false;              // exhaustive minor enumeration where sampled otherwise
  u64 seed = 1;
};

struct ExampleResult {
  std::string id;
  std::vector<std::string> tags;
  std::string description;
  bool passed = false;
  std::string detail;
};

// Replays the worked examples from the literature on these codes.
std::vector<ExampleResult> RunExamples(const ExampleOptions& options);

// Every tag used by at least one example, sorted.
std::vector<std::string> ExampleTags();

}  // namespace mpcodes::cli

#endif  // MPCODES_TOOLS_VERIFY_EXAMPLES_HPP_
