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

#ifndef WDIST_FIELD_HPP_
#define WDIST_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wdist {

namespace internal {
struct FieldTables;
}  // namespace internal

class FieldElement;

// The finite field GF(p^m), q <= 2^16.
//
// Elements are canonical integers in [0, q): element e stands for the
// polynomial whose GF(p) coefficients are the base-p digits of e, reduced
// modulo the field's monic irreducible modulus. 0 and 1 are the additive and
// multiplicative identities.
//
// A Field is a cheap handle onto immutable shared tables; copies compare
// equal and are safe to use from any thread.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Builds GF(p^m). When `modulus` is absent and m >= 2 a built-in table of
  // first-lexicographic irreducible polynomials supplies one. A supplied
  // modulus lists coefficients c0..cm (low to high) and must be monic and
  // irreducible; for m == 1 it must be empty or absent.
  static Field Make(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus = {});

  // Builds GF(q) from a prime power q using the built-in modulus.
  static Field OfOrder(std::uint32_t q);

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  // Coefficients c0..cm of the modulus, empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;
  bool is_prime_field() const { return m() == 1; }

  // Arithmetic on canonical encodings. Inputs must lie in [0, q).
  std::uint32_t Add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Neg(std::uint32_t a) const;
  std::uint32_t Mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Inv(std::uint32_t a) const;
  std::uint32_t Pow(std::uint32_t a, long long exponent) const;

  FieldElement Element(std::uint32_t value) const;
  FieldElement Zero() const;
  FieldElement One() const;

  // "q=p^m", followed by " poly=c0,...,cm" for extension fields.
  std::string Designator() const;

  // Field identity is the (p, m, modulus) triple.
  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const internal::FieldTables> tables)
      : tables_(std::move(tables)) {}

  std::shared_ptr<const internal::FieldTables> tables_;
};

// Built-in modulus for GF(p^m), or nullopt when p^m is outside the table.
std::optional<std::vector<std::uint32_t>> BuiltinModulus(std::uint32_t p,
                                                         std::uint32_t m);

// True iff the monic polynomial c0 + c1 x + ... + x^m is irreducible over
// GF(p).
bool IsIrreducible(const std::vector<std::uint32_t>& coefficients,
                   std::uint32_t p);

bool IsPrime(std::uint64_t n);

class FieldElement {
 public:
  FieldElement(Field field, std::uint32_t value);

  std::uint32_t value() const { return value_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement Inverse() const;
  FieldElement Pow(long long exponent) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  std::uint32_t value_;
};

}  // namespace wdist

#endif  // WDIST_FIELD_HPP_
