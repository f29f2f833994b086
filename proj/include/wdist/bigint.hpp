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

#ifndef WDIST_BIGINT_HPP_
#define WDIST_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wdist {

using BigInt = mpz_class;
using Rational = mpq_class;

// binom(a, b) with binom(a, b) = 0 whenever b < 0 or b > a. Requires a >= 0.
BigInt Binomial(long a, long b);

BigInt Power(const BigInt& base, unsigned long exponent);
inline BigInt Power(unsigned long base, unsigned long exponent) {
  return Power(BigInt(base), exponent);
}

// q^e for a possibly negative exponent.
Rational RationalPower(unsigned long base, long exponent);

std::string ToDecimal(const BigInt& value);
std::string ToDecimal(const Rational& value);  // "a/b", or "a" if integral

// Parses an optionally signed base-10 integer. Throws kParseError.
BigInt ParseDecimal(std::string_view text);

inline bool IsIntegral(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace wdist

#endif  // WDIST_BIGINT_HPP_
