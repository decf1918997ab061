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

#ifndef HEISENLAB_ERROR_H_
#define HEISENLAB_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heisenlab {

// Every domain failure carries one of these codes. The CLI prints the name
// returned by ErrorName() and exits with status 65.
enum class ErrorCode {
  kNotPrime,
  kReducibleModulus,
  kUnsupportedSize,
  kMissingModulus,
  kInfiniteField,
  kCharacteristicMismatch,
  kNotInjective,
  kNotFieldHom,
  kDivisionByZero,
  kFieldMismatch,
  kTooLarge,
  kNotACocycle,
  kShapeMismatch,
  kNotAdditive,
  kInvalidParams,
  kNotPrimeField,
  kNotQuadAdditive,
  kChar2NonzeroCoeff,
  kBadComplement,
  kInvalidHomomorphism,
  kCenterNotPreserved,
  kCommutatorIdentity,
  kDegenerateD,
  kThetaNotHom,
  kProportionalityFailure,
  kRecompositionMismatch,
  kNotCentral,
  kInterpretationFailure,
  kSyntaxError,
  kUnboundVariable,
  kBudgetExceeded,
  kParseError,
};

std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::uint32_t> witness = {});

  ErrorCode code() const { return code_; }
  std::string_view name() const { return ErrorName(code_); }

  // Element codes (pairs, triples, ...) that exhibit the failure, in the
  // enumeration order of whatever carrier the failing check ran over.
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace heisenlab

#endif  // HEISENLAB_ERROR_H_
