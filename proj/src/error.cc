// Copyright 2026 The HeisenLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heisenlab/error.h"

namespace heisenlab {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kUnsupportedSize: return "UnsupportedSize";
    case ErrorCode::kMissingModulus: return "MissingModulus";
    case ErrorCode::kInfiniteField: return "InfiniteField";
    case ErrorCode::kCharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::kNotInjective: return "NotInjective";
    case ErrorCode::kNotFieldHom: return "NotFieldHom";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotACocycle: return "NotACocycle";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotAdditive: return "NotAdditive";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kNotPrimeField: return "NotPrimeField";
    case ErrorCode::kNotQuadAdditive: return "NotQuadAdditive";
    case ErrorCode::kChar2NonzeroCoeff: return "Char2NonzeroCoeff";
    case ErrorCode::kBadComplement: return "BadComplement";
    case ErrorCode::kInvalidHomomorphism: return "InvalidHomomorphism";
    case ErrorCode::kCenterNotPreserved: return "CenterNotPreserved";
    case ErrorCode::kCommutatorIdentity: return "CommutatorIdentity";
    case ErrorCode::kDegenerateD: return "DegenerateD";
    case ErrorCode::kThetaNotHom: return "ThetaNotHom";
    case ErrorCode::kProportionalityFailure: return "ProportionalityFailure";
    case ErrorCode::kRecompositionMismatch: return "RecompositionMismatch";
    case ErrorCode::kNotCentral: return "NotCentral";
    case ErrorCode::kInterpretationFailure: return "InterpretationFailure";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnboundVariable: return "UnboundVariable";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::uint32_t> witness)
    : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace heisenlab
