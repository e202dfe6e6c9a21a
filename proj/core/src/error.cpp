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

#include "mpcodes/error.hpp"

namespace mpcodes {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDegreeZero: return "DegreeZero";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kNoSuchRoot: return "NoSuchRoot";
    case ErrorCode::kNoSuchSubgroup: return "NoSuchSubgroup";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kBadD: return "BadD";
    case ErrorCode::kBadR: return "BadR";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case ErrorCode::kPlanInvalid: return "PlanInvalid";
    case ErrorCode::kInsufficientResponses: return "InsufficientResponses";
    case ErrorCode::kInconsistentResponses: return "InconsistentResponses";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mpcodes
