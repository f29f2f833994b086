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

#ifndef WDIST_CLOSED_FORMS_HPP_
#define WDIST_CLOSED_FORMS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wdist/bigint.hpp"
#include "wdist/code.hpp"
#include "wdist/matrix.hpp"
#include "wdist/moments.hpp"

namespace wdist {

// The functions here map parameters to distributions without checking that a
// code with those parameters exists. Entries are reported as computed, so a
// negative A_i is evidence that no such code exists.

// [n, k, n-k+1]_q:
//   A_w = binom(n, w) sum_{j=0}^{w-d} (-1)^j binom(w, j) (q^(w-d+1-j) - 1).
WeightDistribution MdsDistribution(std::size_t n, std::size_t k,
                                   std::uint32_t q);

// [n, k, n-k]_q with a dual of distance k (total Singleton defect 2), from
// A_{n-k} alone:
//   A_{n-k+i} = binom(n, k-i) sum_{j<i} (-1)^j binom(n-k+i, j) (q^(i-j) - 1)
//               + (-1)^i binom(k, i) A_{n-k},   1 <= i <= k.
WeightDistribution NmdsDistribution(std::size_t n, std::size_t k,
                                    std::uint32_t q, const BigInt& a_d);

struct AmdsInput {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::size_t sigma = 2;  // dual distance is k - sigma + 2
  std::vector<BigInt> seed_weights;  // A_{n-k}, ..., A_{n-k+sigma-2}

  // Throws kInvalidArgument unless 0 < k < n, 2 <= sigma <= k+1 and there
  // are sigma-1 nonnegative seeds.
  void Validate() const;
};

// [n, k, n-k]_q with dual distance k - sigma + 2. The sigma-1 seed weights
// determine the rest by inverting the lower-triangular Pascal matrix
// [binom(k-sigma+1-j, i-j)]. Throws kNegativeEntry if the result has a
// negative entry.
WeightDistribution AmdsDistribution(const AmdsInput& input);

// [binom(k-sigma+1-j, i-j)] for i, j < k-sigma+2.
RationalMatrix AmdsPascal(std::size_t k, std::size_t sigma);

// [(-1)^(i-j) binom(k-sigma+1-j, i-j)], the inverse of AmdsPascal. `size`
// must equal k - sigma + 2.
RationalMatrix PascalInverse(std::size_t size, std::size_t k,
                             std::size_t sigma);

inline int KroneckerDelta(long a, long b) { return a == b ? 1 : 0; }

// Extremal doubly-even self-dual binary codes [24m, 12m, 4m+4]_2. The
// unknowns are A_{4m+4l} for l = 1..4m-1, one relation per nu in
// (20m-4, 24m]:
//   sum_l binom(20m-4l, nu-4m-4l) A_{4m+4l}
//     = binom(24m, nu) (2^(nu-12m) - 1) - delta(24m, nu).
// With `include_symmetry` the 2m-1 rows A_{4m+4l} - A_{20m-4l} = 0 are
// appended. Throws kRangeViolation for nu outside the range.
MomentSystem ExtremalSystem(std::size_t m, const std::vector<std::size_t>& nus,
                            bool include_symmetry);

// Every nu admitted by ExtremalSystem, in decreasing order.
std::vector<std::size_t> ExtremalNuRange(std::size_t m);

// Full length-24m distribution. Starts from the 4m-1 largest nu, falls back
// to other selections on singularity, and verifies the result against every
// relation, the symmetry and the zero pattern. Throws kSingularSelection if
// no selection is nonsingular.
WeightDistribution ExtremalDistribution(std::size_t m);

}  // namespace wdist

#endif  // WDIST_CLOSED_FORMS_HPP_
