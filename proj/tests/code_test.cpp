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

#include "wdist/code.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "wdist/error.hpp"
#include "wdist/io.hpp"

namespace {

using fixtures::Ints;
using wdist::BigInt;
using wdist::CodeMatrix;
using wdist::ErrorCode;
using wdist::Field;
using wdist::LinearCode;
using wdist::WeightDistribution;

template <typename F>
ErrorCode CodeOf(F&& fn) {
  try {
    fn();
  } catch (const wdist::Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kIoError;
}

// Smallest number of linearly dependent columns of m, or cols + 1.
std::size_t MinDependentColumns(const Field& f, const CodeMatrix& m) {
  const auto naive = fixtures::Naive(f);
  const auto rows = fixtures::RowsOf(m);
  const std::size_t n = m.cols();
  for (std::size_t s = 1; s <= n; ++s) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      oracle::Rows sub(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (pick[c]) sub[r].push_back(rows[r][c]);
      if (rows.empty() || oracle::Rank(naive, sub) < s) return s;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n + 1;
}

}  // namespace

TEST_CASE("golden codes C1 and C2") {
  const LinearCode c1 = fixtures::C1(), c2 = fixtures::C2();
  const auto a1 = wdist::BruteWeightDistribution(c1);
  const auto a2 = wdist::BruteWeightDistribution(c2);
  CHECK(a1.counts() == Ints({1, 0, 0, 0, 27, 60, 78, 60, 30}));
  CHECK(a2.counts() == Ints({1, 0, 0, 0, 30, 48, 96, 48, 33}));
  for (const auto* c : {&c1, &c2}) {
    const auto p = wdist::Parameters(*c);
    CHECK(p == wdist::CodeParameters{8, 4, 4, 4, 4});
    CHECK(p.sigma() == 2);
  }
  CHECK(a1.counts() == fixtures::OracleDistribution(c1));
  CHECK(a2.counts() == fixtures::OracleDistribution(c2));
}

TEST_CASE("repetition, Hamming and simplex codes") {
  const Field f2 = Field::OfOrder(2);
  const auto rep = LinearCode::FromGenerator(CodeMatrix::FromRows(f2, {{1, 1}}));
  CHECK(wdist::BruteWeightDistribution(rep).counts() == Ints({1, 0, 1}));
  const auto hamming = LinearCode::FromGenerator(CodeMatrix::FromRows(
      f2, {{1, 0, 0, 0, 0, 1, 1},
           {0, 1, 0, 0, 1, 0, 1},
           {0, 0, 1, 0, 1, 1, 0},
           {0, 0, 0, 1, 1, 1, 1}}));
  CHECK(wdist::BruteWeightDistribution(hamming).counts() ==
        Ints({1, 0, 0, 7, 7, 0, 0, 1}));
  const auto simplex = wdist::Dual(hamming);
  CHECK(simplex.k() == 3);
  CHECK(wdist::BruteWeightDistribution(simplex).counts() ==
        Ints({1, 0, 0, 0, 7, 0, 0, 0}));
  CHECK(wdist::Parameters(hamming) == wdist::CodeParameters{7, 4, 3, 4, 2});
}

TEST_CASE("Gray-code enumeration matches lexicographic enumeration") {
  std::mt19937_64 rng(21);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const Field f = Field::OfOrder(q);
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t n = 2 + rng() % 6;
      const std::size_t k = 1 + rng() % (n - 1);
      if (std::pow(double(q), double(k)) > 70000) continue;
      const auto code = wdist::RandomCode(f, n, k, rng());
      CAPTURE(q);
      REQUIRE(wdist::BruteWeightDistribution(code).counts() ==
              fixtures::OracleDistribution(code));
    }
  }
}

TEST_CASE("worker count does not change the distribution") {
  const Field f = Field::OfOrder(3);
  const auto code = wdist::RandomCode(f, 10, 7, 5);
  const auto serial = wdist::BruteWeightDistribution(code, {1'000'000, 1});
  for (unsigned w : {2u, 3u, 8u, 64u})
    CHECK(wdist::BruteWeightDistribution(code, {1'000'000, w}) == serial);
}

TEST_CASE("MacWilliams transform agrees with two oracles") {
  std::mt19937_64 rng(22);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::OfOrder(q);
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 2 + rng() % (q <= 3 ? 7 : 5);
      const std::size_t k = 1 + rng() % (n - 1);
      const auto code = wdist::RandomCode(f, n, k, rng());
      const auto a = wdist::BruteWeightDistribution(code);
      const auto b = wdist::MacWilliamsTransform(a);
      const auto formula = oracle::MacWilliams(a.counts(), q, k);
      const auto direct = oracle::DualDistribution(
          fixtures::Naive(f), fixtures::RowsOf(code.generator()), n);
      CAPTURE(q);
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(b.k() == n - k);
      for (std::size_t j = 0; j <= n; ++j) {
        REQUIRE(wdist::Rational(b[j]) == formula[j]);
        REQUIRE(b[j] == direct[j]);
      }
      REQUIRE(wdist::MacWilliamsTransform(b) == a);
    }
  }
}

TEST_CASE("MacWilliams rejects vectors that are no distribution") {
  // B_0 would be 2/3.
  const WeightDistribution bogus(3, 3, 1, Ints({1, 1, 0, 0}));
  CHECK(CodeOf([&] { wdist::MacWilliamsTransform(bogus); }) ==
        ErrorCode::kNonIntegralResult);
}

TEST_CASE("Krawtchouk values match the defining sum") {
  const auto t = oracle::PascalTriangle(12);
  for (std::uint32_t q : {2u, 3u, 7u}) {
    for (std::size_t n = 1; n <= 8; ++n)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i) {
          BigInt sum = 0;
          for (std::size_t s = 0; s <= j; ++s) {
            if (s > i || j - s > n - i) continue;
            BigInt term = t[i][s] * t[n - i][j - s] * oracle::Pow(q - 1, j - s);
            sum += s % 2 ? BigInt(-term) : term;
          }
          REQUIRE(wdist::Krawtchouk(n, q, j, i) == sum);
        }
  }
}

TEST_CASE("minimum distance equals the smallest dependent column set of H") {
  std::mt19937_64 rng(23);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::OfOrder(q);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 3 + rng() % 6;
      const std::size_t k = 1 + rng() % (n - 1);
      if (std::pow(double(q), double(k)) > 50000) continue;
      const auto code = wdist::RandomCode(f, n, k, rng());
      const auto p = wdist::Parameters(code);
      REQUIRE(p.d == MinDependentColumns(f, code.parity_check()));
      REQUIRE(p.d_perp == MinDependentColumns(f, code.generator()));
      REQUIRE(p.d + k <= n + 1);
      REQUIRE(p.d_perp <= k + 1);
      REQUIRE(p.sigma() >= 0);
    }
  }
}

TEST_CASE("dual of the dual is the code") {
  std::mt19937_64 rng(24);
  for (std::uint32_t q : {2u, 4u, 7u, 9u}) {
    const Field f = Field::OfOrder(q);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 2 + rng() % 8;
      const std::size_t k = 1 + rng() % (n - 1);
      const auto code = wdist::RandomCode(f, n, k, rng());
      const auto dd = wdist::Dual(wdist::Dual(code));
      REQUIRE(dd.k() == k);
      std::vector<std::vector<std::uint32_t>> stacked;
      for (const auto* g : {&code.generator(), &dd.generator()})
        for (std::size_t r = 0; r < g->rows(); ++r)
          stacked.emplace_back(g->row(r).begin(), g->row(r).end());
      REQUIRE(wdist::GfRank(CodeMatrix::FromRows(f, stacked)) == k);
    }
  }
}

TEST_CASE("degenerate codes") {
  const Field f = Field::OfOrder(3);
  const auto zero = LinearCode::FromGenerator(CodeMatrix(f, 0, 4));
  CHECK(zero.parity_check().rows() == 4);
  CHECK(wdist::BruteWeightDistribution(zero).counts() == Ints({1, 0, 0, 0, 0}));
  CHECK(CodeOf([&] { wdist::MinDistance(zero); }) == ErrorCode::kZeroCode);
  CHECK(CodeOf([&] {
          wdist::ParametersFromDistribution(wdist::BruteWeightDistribution(zero));
        }) == ErrorCode::kZeroCode);
  CHECK(wdist::MacWilliamsTransform(wdist::BruteWeightDistribution(zero))
            .counts() == Ints({1, 8, 24, 32, 16}));
  const auto full = LinearCode::FromGenerator(CodeMatrix::Identity(f, 3));
  CHECK(wdist::Parameters(full) == wdist::CodeParameters{3, 3, 1, 4, 3});
  CHECK(CodeOf([&] {
          LinearCode::FromGenerator(CodeMatrix::FromRows(f, {{1, 2}, {2, 1}}));
        }) == ErrorCode::kRankDeficientGenerator);
}

TEST_CASE("enumeration budget") {
  const auto code = wdist::RandomCode(Field::OfOrder(5), 9, 6, 3);
  CHECK(CodeOf([&] { wdist::BruteWeightDistribution(code, {1000, 1}); }) ==
        ErrorCode::kBudgetExceeded);
  CHECK(wdist::BruteWeightDistribution(code, {15625, 1}).Total() == 15625);
}

TEST_CASE("random codes are seeded and full rank") {
  const Field f = Field::OfOrder(4);
  const auto a = wdist::RandomCode(f, 9, 4, 77);
  const auto b = wdist::RandomCode(f, 9, 4, 77);
  const auto c = wdist::RandomCode(f, 9, 4, 78);
  CHECK(a.generator() == b.generator());
  CHECK_FALSE(a.generator() == c.generator());
  CHECK(wdist::GfRank(a.generator()) == 4);
  CHECK(CodeOf([&] { wdist::RandomCode(f, 4, 4, 1); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("distribution validity and parameter records") {
  CHECK(WeightDistribution(2, 2, 1, Ints({1, 0, 1})).IsValid());
  CHECK(WeightDistribution(2, 2, 1, Ints({1, 0, 1})).MinWeight() == 2u);
  CHECK(WeightDistribution(2, 2, 1, Ints({1, 2, -1})).Violations().size() == 1);
  CHECK(WeightDistribution(2, 2, 1, Ints({2, 0, 1})).Violations().size() == 2);
  CHECK(wdist::CodeParameters::Make(8, 4, 4, 4, 4).sigma() == 2);
  CHECK(CodeOf([] { wdist::CodeParameters::Make(8, 4, 4, 6, 4); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { wdist::CodeParameters::Make(8, 4, 4, 4, 6); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { wdist::CodeParameters::Make(8, 9, 4, 1, 1); }) ==
        ErrorCode::kInvalidArgument);
}
