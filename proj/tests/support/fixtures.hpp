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

#ifndef WDIST_TESTS_SUPPORT_FIXTURES_HPP_
#define WDIST_TESTS_SUPPORT_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wdist/code.hpp"
#include "wdist/error.hpp"
#include "wdist/field.hpp"
#include "wdist/io.hpp"
#include "wdist/matrix.hpp"

namespace fixtures {

// GF(4) with alpha = 2 (x) and alpha^2 = 3 (x + 1) under x^2 + x + 1.
inline constexpr const char* kG1 =
    "q=2^2 poly=1,1,1\n"
    "8 4\n"
    "1 0 0 0 1 3 2 0\n"
    "0 1 0 0 0 1 3 2\n"
    "0 0 1 0 2 2 0 1\n"
    "0 0 0 1 1 3 1 1\n";
inline constexpr const char* kG2 =
    "q=2^2 poly=1,1,1\n"
    "8 4\n"
    "1 0 0 0 1 3 2 0\n"
    "0 1 0 0 3 0 1 1\n"
    "0 0 1 0 0 1 3 3\n"
    "0 0 0 1 2 2 0 1\n";

inline wdist::LinearCode C1() { return wdist::ParseCode(kG1); }
inline wdist::LinearCode C2() { return wdist::ParseCode(kG2); }

inline std::vector<wdist::BigInt> Ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

inline oracle::NaiveField Naive(const wdist::Field& f) {
  if (f.m() == 1) return oracle::NaiveField(f.p(), {0, 1});
  return oracle::NaiveField(f.p(), f.modulus());
}

inline oracle::Rows RowsOf(const wdist::CodeMatrix& m) {
  oracle::Rows out(m.rows(), oracle::Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  return out;
}

inline std::vector<wdist::BigInt> OracleDistribution(const wdist::LinearCode& c) {
  return oracle::Distribution(Naive(c.field()), RowsOf(c.generator()), c.n());
}

// Reed-Solomon [n, k]_q: row i evaluates x^i at the first n field elements.
// n = q + 1 adds the point at infinity (doubly extended code).
inline wdist::LinearCode ReedSolomon(const wdist::Field& f, std::size_t n,
                                     std::size_t k) {
  if (n > f.q() + 1 || k == 0 || k > n)
    throw wdist::Error(wdist::ErrorCode::kInvalidArgument, "bad RS shape");
  wdist::CodeMatrix g(f, k, n);
  if (n == f.q() + 1) g.set(k - 1, n - 1, 1);
  for (std::size_t j = 0; j < std::min<std::size_t>(n, f.q()); ++j) {
    std::uint32_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      g.set(i, j, power);
      power = f.Mul(power, static_cast<std::uint32_t>(j));
    }
  }
  return wdist::LinearCode::FromGenerator(std::move(g));
}

struct CorpusEntry {
  wdist::LinearCode code;
  std::uint64_t seed;
};

// Seeded random codes, q cycling through {2, 3, 4, 5}, 4 <= n <= 10.
inline std::vector<CorpusEntry> Corpus(std::size_t count, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  const std::uint32_t qs[] = {2, 3, 4, 5};
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t q = qs[i % 4];
    const std::size_t n = 4 + (i / 4) % 7;
    const std::size_t k = 1 + (i * 7 + seed) % (n - 1);
    const std::uint64_t s = seed * 100003 + i;
    out.push_back({wdist::RandomCode(wdist::Field::OfOrder(q), n, k, s), s});
  }
  return out;
}

}  // namespace fixtures

#endif  // WDIST_TESTS_SUPPORT_FIXTURES_HPP_
