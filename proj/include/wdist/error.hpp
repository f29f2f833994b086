// Copyright 2026 The wdist Authors
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

#ifndef WDIST_ERROR_HPP_
#define WDIST_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdist/bigint.hpp"

namespace wdist {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kIoError,
  kNotPrime,
  kReduciblePolynomial,
  kUnsupportedOrder,
  kDivisionByZero,
  kFieldMismatch,
  kIndexOutOfRange,
  kDuplicateIndex,
  kSingularMatrix,
  kRankDeficientGenerator,
  kBudgetExceeded,
  kZeroCode,
  kNonIntegralResult,
  kNegativeEntry,
  kTooFewKnowns,
  kSingularReducedSystem,
  kInconsistentKnowns,
  kNonIntegralSolution,
  kNegativeSolution,
  kRegimeViolation,
  kRangeViolation,
  kSingularSelection,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by exact solvers when the coefficient matrix is rank deficient.
// Carries the rank found and a nonzero vector x with A x = 0.
class SingularError : public Error {
 public:
  SingularError(ErrorCode code, const std::string& message, std::size_t rank,
                std::vector<Rational> kernel_witness)
      : Error(code, message),
        rank_(rank),
        kernel_witness_(std::move(kernel_witness)) {}

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Rational>& kernel_witness() const noexcept {
    return kernel_witness_;
  }

 private:
  std::size_t rank_;
  std::vector<Rational> kernel_witness_;
};

}  // namespace wdist

#endif  // WDIST_ERROR_HPP_
