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

#ifndef WDIST_CENSUS_HPP_
#define WDIST_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>

#include "wdist/bigint.hpp"
#include "wdist/code.hpp"
#include "wdist/matrix.hpp"

namespace wdist {

// N_M(nu, r) for every rank r: how many of the s x nu column submatrices of
// an s x t matrix M have rank r. Only nonzero counts are stored.
struct RankCensus {
  std::size_t nu = 0;
  std::size_t source_rows = 0;
  std::size_t source_cols = 0;
  std::map<std::size_t, BigInt> counts;

  BigInt Total() const;
  // binom(source_cols, nu), which Total() must equal.
  BigInt BinomTotal() const;
  BigInt Count(std::size_t rank) const;
};

struct CensusOptions {
  std::uint64_t budget = 10'000'000;  // maximum column subsets
  unsigned workers = 1;
};

// Exhaustive over all binom(cols, nu) column subsets in lexicographic order.
// Requires 1 <= nu <= cols; throws kBudgetExceeded.
RankCensus Census(const CodeMatrix& m, std::size_t nu,
                  const CensusOptions& options = {});

// Memoizes Census(m, nu) per nu for one matrix. Thread-safe.
class CensusCache {
 public:
  explicit CensusCache(CodeMatrix m, CensusOptions options = {})
      : matrix_(std::move(m)), options_(options) {}

  const RankCensus& Get(std::size_t nu);
  const CodeMatrix& matrix() const { return matrix_; }

 private:
  CodeMatrix matrix_;
  CensusOptions options_;
  std::mutex mu_;
  std::map<std::size_t, RankCensus> cache_;
};

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

// Both sides of
//   sum_{s<=nu} binom(n-s, nu-s) A_s = sum_r N_H(nu, r) q^(nu-r)
// with the left side taken from `a` and the right side from a census of H.
// `cache`, when given, must wrap code.parity_check().
IdentityCheck VerifyCountingIdentity(const LinearCode& code,
                                     const WeightDistribution& a,
                                     std::size_t nu,
                                     CensusCache* cache = nullptr,
                                     const CensusOptions& options = {});

// For nu > n - d_perp every (n-k) x nu submatrix of H has full rank n-k.
// Returns whether the census agrees; throws kRegimeViolation when
// nu <= n - d_perp.
bool CheckFullRankRegime(const LinearCode& code, std::size_t nu,
                         std::size_t d_perp, CensusCache* cache = nullptr,
                         const CensusOptions& options = {});

}  // namespace wdist

#endif  // WDIST_CENSUS_HPP_
