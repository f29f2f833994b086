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

#include "wdist/closed_forms.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "wdist/error.hpp"

namespace {

using fixtures::Ints;
using wdist::BigInt;
using wdist::ErrorCode;
using wdist::Rational;

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

// A_w for MDS codes by the textbook formula, evaluated from Pascal's triangle.
std::vector<BigInt> MdsOracle(std::size_t n, std::size_t k, std::uint32_t q) {
  const auto t = oracle::PascalTriangle(n);
  const std::size_t d = n - k + 1;
  std::vector<BigInt> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t w = d; w <= n; ++w) {
    BigInt sum = 0;
    for (std::size_t j = 0; j <= w - d; ++j) {
      BigInt term = t[w][j] * (oracle::Pow(q, w - d + 1 - j) - 1);
      sum += j % 2 ? BigInt(-term) : term;
    }
    a[w] = t[n][w] * sum;
  }
  return a;
}

}  // namespace

TEST_CASE("MDS distributions") {
  CHECK(wdist::MdsDistribution(7, 3, 8).counts() ==
        Ints({1, 0, 0, 0, 0, 147, 147, 217}));
  for (std::size_t n = 1; n <= 14; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::uint32_t q : {2u, 3u, 4u, 7u, 16u}) {
        const auto a = wdist::MdsDistribution(n, k, q);
        const std::size_t d = n - k + 1;
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(a.counts() == MdsOracle(n, k, q));
        REQUIRE(a.Total() == oracle::Pow(q, k));
        REQUIRE(a[d] == wdist::Binomial(static_cast<long>(n),
                                        static_cast<long>(d)) *
                            (q - 1));
      }
  // Full space: binomial expansion of q^n.
  const auto full = wdist::MdsDistribution(6, 6, 5);
  for (std::size_t w = 0; w <= 6; ++w)
    CHECK(full[w] == wdist::Binomial(6, static_cast<long>(w)) *
                         oracle::Pow(4, w));
  CHECK(CodeOf([] { wdist::MdsDistribution(3, 4, 2); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { wdist::MdsDistribution(3, 0, 2); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("MDS formula equals the sigma = 0 moment solution") {
  // n <= q + 1 so that the parameters are realisable.
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t d = n - k + 1;
      wdist::Knowns knowns{{0, 1}};
      for (std::size_t i = 1; i < d; ++i) knowns[i] = 0;
      const auto s = wdist::BuildPascalSystem({n, k, d, k + 1, 11});
      CHECK(wdist::SolveWithKnowns(s, knowns) ==
            wdist::MdsDistribution(n, k, 11));
    }
}

TEST_CASE("MDS formula against Reed-Solomon codes") {
  for (std::uint32_t q : {4u, 5u, 7u}) {
    const auto f = wdist::Field::OfOrder(q);
    for (std::size_t n = 2; n <= q + 1; ++n)
      for (std::size_t k = 1; k <= n && k <= 4; ++k) {
        const auto rs = fixtures::ReedSolomon(f, n, k);
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(wdist::BruteWeightDistribution(rs) ==
                wdist::MdsDistribution(n, k, q));
      }
  }
}

TEST_CASE("NMDS distributions of the golden codes") {
  CHECK(wdist::NmdsDistribution(8, 4, 4, 27).counts() ==
        Ints({1, 0, 0, 0, 27, 60, 78, 60, 30}));
  CHECK(wdist::NmdsDistribution(8, 4, 4, 30).counts() ==
        Ints({1, 0, 0, 0, 30, 48, 96, 48, 33}));
  // i = 1 term.
  for (long ad : {0L, 5L, 27L}) {
    const auto a = wdist::NmdsDistribution(8, 4, 4, ad);
    CHECK(a[5] == wdist::Binomial(8, 3) * 3 - 4 * ad);
  }
  // Unrealisable A_d shows up as negative entries, not an error.
  const auto bad = wdist::NmdsDistribution(8, 4, 4, 200);
  CHECK_FALSE(bad.IsValid());
  CHECK(bad[5] < 0);
}

TEST_CASE("NMDS and AMDS agree at sigma = 2 on a grid") {
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (long ad = 0; ad <= 50; ++ad) {
          const auto nmds = wdist::NmdsDistribution(n, k, q, ad);
          if (!nmds.IsValid()) {
            CHECK(CodeOf([&] {
                    wdist::AmdsDistribution({n, k, q, 2, {BigInt(ad)}});
                  }) == ErrorCode::kNegativeEntry);
            continue;
          }
          REQUIRE(wdist::AmdsDistribution({n, k, q, 2, {BigInt(ad)}}) == nmds);
        }
}

TEST_CASE("AMDS output satisfies both moment systems") {
  // C1 at sigma = 2, and hypothetical sigma = 3 parameters.
  const auto a = wdist::AmdsDistribution({8, 4, 4, 2, Ints({27})});
  CHECK(a.counts() == Ints({1, 0, 0, 0, 27, 60, 78, 60, 30}));
  CHECK(wdist::AmdsDistribution({8, 4, 4, 2, Ints({30})}).counts() ==
        Ints({1, 0, 0, 0, 30, 48, 96, 48, 33}));
  for (std::size_t s1 = 0; s1 <= 6; ++s1)
    for (std::size_t s2 = 0; s2 <= 40; s2 += 4) {
      const wdist::AmdsInput in{9, 4, 5, 3, {BigInt(s1), BigInt(s2)}};
      try {
        const auto dist = wdist::AmdsDistribution(in);
        const wdist::CodeParameters p{9, 4, 5, 3, 5};
        CHECK(wdist::ViolatedRows(wdist::BuildPascalSystem(p), dist).empty());
        CHECK(wdist::ViolatedRows(wdist::BuildPlessSystem(p), dist).empty());
        CHECK(dist[5] == s1);
        CHECK(dist[6] == s2);
      } catch (const wdist::Error& e) {
        CHECK(e.code() == ErrorCode::kNegativeEntry);
      }
    }
}

TEST_CASE("AMDS input validation") {
  CHECK(CodeOf([] { wdist::AmdsDistribution({8, 4, 4, 3, Ints({1})}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { wdist::AmdsDistribution({8, 4, 4, 1, {}}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] {
          wdist::AmdsDistribution({8, 4, 4, 6, Ints({1, 1, 1, 1, 1})});
        }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { wdist::AmdsDistribution({8, 4, 4, 2, Ints({-1})}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("inverse Pascal matrices") {
  for (std::size_t k = 1; k <= 10; ++k)
    for (std::size_t sigma = 2; sigma <= k + 1; ++sigma) {
      const std::size_t size = k - sigma + 2;
      const auto p = wdist::AmdsPascal(k, sigma);
      const auto inv = wdist::PascalInverse(size, k, sigma);
      REQUIRE(p.rows() == size);
      REQUIRE(p * inv == wdist::RationalMatrix::Identity(size));
      REQUIRE(inv * p == wdist::RationalMatrix::Identity(size));
      for (std::size_t i = 0; i < size; ++i) {
        REQUIRE(p.at(i, i) == 1);
        REQUIRE(inv.at(i, i) == 1);
      }
    }
  CHECK(wdist::AmdsPascal(4, 2).rows() == 4);
  CHECK(CodeOf([] { wdist::PascalInverse(3, 4, 2); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(wdist::KroneckerDelta(3, 3) == 1);
  CHECK(wdist::KroneckerDelta(3, 4) == 0);
}

TEST_CASE("extremal systems for m = 1") {
  const auto s12 = wdist::ExtremalSystem(1, {22, 24}, true);
  CHECK(s12.columns == std::vector<std::size_t>{8, 12, 16});
  REQUIRE(s12.matrix.rows() == 3);
  CHECK(s12.matrix.at(0, 0) == 120);
  CHECK(s12.matrix.at(0, 1) == 66);
  CHECK(s12.matrix.at(0, 2) == 28);
  CHECK(s12.rhs[0] == 276 * 1023);
  CHECK(s12.rhs[1] == 4094);
  CHECK(s12.rows[2].kind == wdist::RowTag::Kind::kSymmetry);
  CHECK(wdist::SolveExact(s12.matrix, s12.rhs) ==
        std::vector<Rational>{759, 2576, 759});
  const auto s13 = wdist::ExtremalSystem(1, {23, 24}, true);
  CHECK(wdist::Determinant(s13.matrix) == 0);
  try {
    wdist::SolveExact(s13.matrix, s13.rhs);
    FAIL("system 13 solved");
  } catch (const wdist::SingularError& e) {
    CHECK(e.rank() == 2);
    CHECK(s13.matrix.Apply(e.kernel_witness()) ==
          std::vector<Rational>{0, 0, 0});
  }
  CHECK(CodeOf([] { wdist::ExtremalSystem(1, {16}, false); }) ==
        ErrorCode::kRangeViolation);
  CHECK(wdist::ExtremalSystem(1, {17}, false).matrix.rows() == 1);
  CHECK(CodeOf([] { wdist::ExtremalSystem(1, {25}, false); }) ==
        ErrorCode::kRangeViolation);
  CHECK(CodeOf([] { wdist::ExtremalSystem(0, {24}, false); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("extremal distributions for m = 1..5") {
  const auto golay = wdist::ExtremalDistribution(1);
  CHECK(golay[8] == 759);
  CHECK(golay[12] == 2576);
  CHECK(golay[16] == 759);
  // Known A_d of the extremal [48,24,12] and [72,36,16] enumerators.
  CHECK(wdist::ExtremalDistribution(2)[12] == 17296);
  CHECK(wdist::ExtremalDistribution(3)[16] == 249849);
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto a = wdist::ExtremalDistribution(m);
    const std::size_t n = 24 * m;
    CAPTURE(m);
    CHECK(a.Total() == oracle::Pow(2, 12 * m));
    CHECK(a[0] == 1);
    CHECK(a[n] == 1);
    for (std::size_t i = 1; i < n; ++i) {
      if (i % 4 || i < 4 * m + 4 || i > 20 * m - 4) CHECK(a[i] == 0);
      CHECK(a[i] == a[n - i]);
      CHECK(a[i] >= 0);
    }
    const auto all = wdist::ExtremalSystem(m, wdist::ExtremalNuRange(m), false);
    CHECK(all.matrix.rows() == 4 * m + 4);
    std::vector<Rational> x;
    for (auto c : all.columns) x.push_back(Rational(a[c]));
    CHECK(all.matrix.Apply(x) == all.rhs);
    // Self-dual: the distribution is its own MacWilliams transform.
    CHECK(wdist::MacWilliamsTransform(a) == a);
  }
}

TEST_CASE("every 4m-1 subset of moment rows is independent for m <= 2") {
  for (std::size_t m : {1u, 2u}) {
    const auto nus = wdist::ExtremalNuRange(m);
    const auto golden = wdist::ExtremalDistribution(m);
    std::vector<bool> pick(nus.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(4 * m - 1), true);
    do {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < nus.size(); ++i)
        if (pick[i]) chosen.push_back(nus[i]);
      const auto s = wdist::ExtremalSystem(m, chosen, false);
      const auto x = wdist::SolveExact(s.matrix, s.rhs);
      for (std::size_t i = 0; i < x.size(); ++i)
        REQUIRE(x[i] == Rational(golden[s.columns[i]]));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}
