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

#include "wdist/bigint.hpp"

#include "wdist/error.hpp"

namespace wdist {

BigInt Binomial(long a, long b) {
  if (a < 0)
    throw Error(ErrorCode::kInvalidArgument,
                "binomial with negative top index " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

BigInt Power(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational RationalPower(unsigned long base, long exponent) {
  if (exponent >= 0)
    return Rational(Power(base, static_cast<unsigned long>(exponent)));
  Rational out(BigInt(1), Power(base, static_cast<unsigned long>(-exponent)));
  out.canonicalize();
  return out;
}

std::string ToDecimal(const BigInt& value) { return value.get_str(10); }

std::string ToDecimal(const Rational& value) { return value.get_str(10); }

BigInt ParseDecimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size())
    throw Error(ErrorCode::kParseError,
                "expected a decimal integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw Error(ErrorCode::kParseError,
                  "expected a decimal integer, got '" + std::string(text) +
                      "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicateIndex: return "DuplicateIndex";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kRankDeficientGenerator: return "RankDeficientGenerator";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kZeroCode: return "ZeroCode";
    case ErrorCode::kNonIntegralResult: return "NonIntegralResult";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kTooFewKnowns: return "TooFewKnowns";
    case ErrorCode::kSingularReducedSystem: return "SingularReducedSystem";
    case ErrorCode::kInconsistentKnowns: return "InconsistentKnowns";
    case ErrorCode::kNonIntegralSolution: return "NonIntegralSolution";
    case ErrorCode::kNegativeSolution: return "NegativeSolution";
    case ErrorCode::kRegimeViolation: return "RegimeViolation";
    case ErrorCode::kRangeViolation: return "RangeViolation";
    case ErrorCode::kSingularSelection: return "SingularSelection";
  }
  return "Unknown";
}

}  // namespace wdist
