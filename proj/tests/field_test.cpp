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

#include "wdist/field.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "wdist/error.hpp"

namespace {

using wdist::ErrorCode;
using wdist::Field;

std::vector<std::uint32_t> PrimePowers(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= limit; ++q) {
    std::uint32_t p = 2;
    while (q % p) ++p;
    std::uint32_t v = q;
    while (v % p == 0) v /= p;
    if (v == 1) out.push_back(q);
  }
  return out;
}

// Remainder of a by monic-or-not b over GF(p), both low-to-high.
std::vector<std::uint32_t> PolyMod(std::vector<std::uint32_t> a,
                                   const std::vector<std::uint32_t>& b,
                                   std::uint32_t p) {
  const oracle::NaiveField fp(p, {0, 1});
  const std::uint32_t lead_inv = fp.Inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint32_t c = fp.Mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = fp.Sub(a[shift + i], fp.Mul(c, b[i]));
    a.pop_back();
  }
  return a;
}

bool TrialIrreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(deg + 1, 0);
      std::size_t v = code;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[deg] = 1;
      const auto r = PolyMod(f, g, p);
      bool zero = true;
      for (auto c : r) zero &= c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("small fields agree with schoolbook polynomial arithmetic") {
  for (std::uint32_t q : PrimePowers(128)) {
    const Field f = Field::OfOrder(q);
    const auto naive = fixtures::Naive(f);
    CAPTURE(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        REQUIRE(f.Add(a, b) == naive.Add(a, b));
        REQUIRE(f.Mul(a, b) == naive.Mul(a, b));
        REQUIRE(f.Sub(a, b) == naive.Sub(a, b));
      }
    }
  }
}

TEST_CASE("inverses, Frobenius and the multiplicative order") {
  for (std::uint32_t q : PrimePowers(256)) {
    const Field f = Field::OfOrder(q);
    CAPTURE(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      REQUIRE(f.Mul(a, f.Inv(a)) == 1);
      REQUIRE(f.Div(a, a) == 1);
      REQUIRE(f.Pow(a, q - 1) == 1);
      REQUIRE(f.Pow(a, -1) == f.Inv(a));
    }
    for (std::uint32_t a = 0; a < q; a += 1 + q / 37) {
      REQUIRE(f.Add(a, f.Neg(a)) == 0);
      REQUIRE(f.Pow(a, q) == a);
      for (std::uint32_t b = 0; b < q; b += 1 + q / 23) {
        const std::uint32_t p = f.p();
        REQUIRE(f.Pow(f.Add(a, b), p) == f.Add(f.Pow(a, p), f.Pow(b, p)));
      }
    }
  }
}

TEST_CASE("large fields agree with the oracle on random samples") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {65536u, 65521u, 59049u, 32768u, 16807u, 50653u}) {
    const Field f = Field::OfOrder(q);
    const auto naive = fixtures::Naive(f);
    CAPTURE(q);
    for (int i = 0; i < 2000; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() % q);
      const auto b = static_cast<std::uint32_t>(rng() % q);
      REQUIRE(f.Mul(a, b) == naive.Mul(a, b));
      REQUIRE(f.Add(a, b) == naive.Add(a, b));
      if (a) REQUIRE(naive.Mul(a, f.Inv(a)) == 1);
    }
  }
}

TEST_CASE("GF(4) and GF(5) worked examples") {
  const Field f4 = Field::OfOrder(4);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  const auto alpha = f4.Element(2);
  CHECK((alpha * alpha).value() == 3);
  CHECK((alpha * alpha * alpha).value() == 1);
  CHECK((alpha + f4.One()).value() == 3);
  const Field f5 = Field::OfOrder(5);
  CHECK(f5.Inv(2) == 3);
  CHECK(f5.Element(2).Inverse() == f5.Element(3));
  CHECK(f5.Neg(2) == 3);
}

TEST_CASE("built-in moduli are the first irreducible in encoding order") {
  for (std::uint32_t q : PrimePowers(1024)) {
    const Field f = Field::OfOrder(q);
    if (f.is_prime_field()) continue;
    CAPTURE(q);
    const std::uint32_t p = f.p(), m = f.m();
    std::vector<std::uint32_t> expected;
    for (std::uint32_t code = 0; expected.empty(); ++code) {
      std::vector<std::uint32_t> poly(m + 1, 0);
      std::uint32_t v = code;
      for (std::uint32_t i = 0; i < m; ++i) {
        poly[i] = v % p;
        v /= p;
      }
      poly[m] = 1;
      if (poly[0] != 0 && TrialIrreducible(poly, p)) expected = poly;
    }
    CHECK(f.modulus() == expected);
    CHECK(wdist::IsIrreducible(expected, p));
  }
}

TEST_CASE("every built-in modulus passes the trial-division oracle") {
  for (std::uint32_t q : PrimePowers(Field::kMaxOrder)) {
    const Field f = Field::OfOrder(q);
    if (f.is_prime_field() || q > 20000) continue;
    CAPTURE(q);
    CHECK(TrialIrreducible(f.modulus(), f.p()));
  }
}

TEST_CASE("irreducibility test on known cases") {
  CHECK(wdist::IsIrreducible({1, 1, 1}, 2));
  CHECK_FALSE(wdist::IsIrreducible({1, 0, 1}, 2));  // (x+1)^2
  CHECK(wdist::IsIrreducible({1, 0, 1}, 3));
  CHECK_FALSE(wdist::IsIrreducible({1, 0, 1}, 5));  // 2 is a root
  // Product of two irreducible quadratics has no roots but is reducible.
  CHECK_FALSE(wdist::IsIrreducible({1, 0, 1, 0, 1}, 2));
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t m = 1; m <= (p == 2 ? 7u : 4u); ++m) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < m; ++i) count *= p;
      for (std::uint32_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> poly(m + 1, 1);
        std::uint32_t v = code;
        for (std::uint32_t i = 0; i < m; ++i) {
          poly[i] = v % p;
          v /= p;
        }
        CAPTURE(p);
        CAPTURE(code);
        CHECK(wdist::IsIrreducible(poly, p) == TrialIrreducible(poly, p));
      }
    }
  }
}

TEST_CASE("explicit moduli and field identity") {
  const Field a = Field::Make(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
  const Field b = Field::Make(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(a == Field::OfOrder(8));
  CHECK_FALSE(a == b);
  CHECK(a.Designator() == "q=2^3 poly=1,1,0,1");
  CHECK(Field::OfOrder(7).Designator() == "q=7^1");
  const auto naive = fixtures::Naive(b);
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) CHECK(b.Mul(x, y) == naive.Mul(x, y));
  CHECK_THROWS_AS((void)(a.Element(1) + b.Element(1)), wdist::Error);
}

TEST_CASE("field construction errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const wdist::Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;  // sentinel: nothing thrown
  };
  CHECK(code_of([] { Field::Make(4, 1); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { Field::OfOrder(6); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { Field::OfOrder(1); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { Field::Make(2, 17); }) == ErrorCode::kUnsupportedOrder);
  CHECK(code_of([] { Field::Make(65537, 1); }) == ErrorCode::kUnsupportedOrder);
  CHECK(code_of([] { Field::Make(2, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] {
          Field::Make(2, 2, std::vector<std::uint32_t>{1, 0, 1});
        }) == ErrorCode::kReduciblePolynomial);
  CHECK(code_of([] {
          Field::Make(3, 2, std::vector<std::uint32_t>{1, 0, 2});
        }) == ErrorCode::kInvalidArgument);  // not monic
  CHECK(code_of([] {
          Field::Make(3, 2, std::vector<std::uint32_t>{1, 1});
        }) == ErrorCode::kInvalidArgument);  // wrong degree
  CHECK(code_of([] {
          Field::Make(5, 1, std::vector<std::uint32_t>{1, 1});
        }) == ErrorCode::kInvalidArgument);
  const Field f = Field::OfOrder(9);
  CHECK(code_of([&] { f.Inv(0); }) == ErrorCode::kDivisionByZero);
  CHECK(code_of([&] { f.Div(3, 0); }) == ErrorCode::kDivisionByZero);
  CHECK(code_of([&] { f.Pow(0, -2); }) == ErrorCode::kDivisionByZero);
  CHECK(f.Pow(0, 0) == 1);
}
