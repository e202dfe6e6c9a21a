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

#ifndef MPCODES_ERROR_HPP_
#define MPCODES_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpcodes {

enum class ErrorCode {
  kNotPrime,
  kDegreeZero,
  kFieldTooLarge,
  kNotIrreducible,
  kNoSuchRoot,
  kNoSuchSubgroup,
  kDivisionByZero,
  kFieldMismatch,
  kShapeMismatch,
  kNotPrimitiveRoot,
  kSingularSystem,
  kBadD,
  kBadR,
  kBadParams,
  kBudgetExceeded,
  kBudgetExhausted,
  kZeroEvaluationPoint,
  kPlanInvalid,
  kInsufficientResponses,
  kInconsistentResponses,
  kOutOfRange,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// contract violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mpcodes

#endif  // MPCODES_ERROR_HPP_
