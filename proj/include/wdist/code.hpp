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

#ifndef WDIST_CODE_HPP_
#define WDIST_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdist/bigint.hpp"
#include "wdist/field.hpp"
#include "wdist/matrix.hpp"

namespace wdist {

// An [n, k]_q linear code held as a full-rank generator G (k x n) and a
// full-rank parity-check matrix H ((n-k) x n) with G H^T = 0.
class LinearCode {
 public:
  // H is computed as a kernel basis of G. Throws kRankDeficientGenerator.
  static LinearCode FromGenerator(CodeMatrix generator);

  const Field& field() const { return generator_.field(); }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  const CodeMatrix& generator() const { return generator_; }
  const CodeMatrix& parity_check() const { return parity_check_; }

 private:
  LinearCode(CodeMatrix g, CodeMatrix h)
      : generator_(std::move(g)), parity_check_(std::move(h)) {}
  friend LinearCode Dual(const LinearCode& code);

  CodeMatrix generator_;
  CodeMatrix parity_check_;
};

// Swaps the roles of G and H.
LinearCode Dual(const LinearCode& code);

// Counts A_0..A_n of codewords per Hamming weight.
//
// Counts are signed so that closed-form evaluations on hypothetical parameter
// sets can report negative entries instead of clamping them; Violations()
// lists every broken invariant of a genuine distribution.
class WeightDistribution {
 public:
  WeightDistribution(std::size_t n, std::uint32_t q, std::size_t k,
                     std::vector<BigInt> counts);

  std::size_t n() const { return counts_.size() - 1; }
  std::uint32_t q() const { return q_; }
  std::size_t k() const { return k_; }
  const std::vector<BigInt>& counts() const { return counts_; }
  const BigInt& operator[](std::size_t i) const { return counts_.at(i); }

  // Smallest i >= 1 with A_i != 0.
  std::optional<std::size_t> MinWeight() const;
  BigInt Total() const;

  // Empty iff A_0 = 1, all A_i >= 0 and sum A_i = q^k.
  std::vector<std::string> Violations() const;
  bool IsValid() const { return Violations().empty(); }

  friend bool operator==(const WeightDistribution& a,
                         const WeightDistribution& b) {
    return a.q_ == b.q_ && a.k_ == b.k_ && a.counts_ == b.counts_;
  }

 private:
  std::uint32_t q_;
  std::size_t k_;
  std::vector<BigInt> counts_;
};

// n, k, d, d_perp and the total Singleton defect
// sigma = (n-k+1-d) + (k+1-d_perp) = n + 2 - d - d_perp.
//
// The zero code has no nonzero word; by convention its minimum distance is
// n + 1, so the full space (k = n) has d_perp = n + 1 and sigma = 0.
struct CodeParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t d_perp = 0;
  std::uint32_t q = 0;

  // Validates the Singleton bounds. Throws kInvalidArgument.
  static CodeParameters Make(std::size_t n, std::size_t k, std::uint32_t q,
                             std::size_t d, std::size_t d_perp);

  long sigma() const {
    return static_cast<long>(n) + 2 - static_cast<long>(d) -
           static_cast<long>(d_perp);
  }
  friend bool operator==(const CodeParameters&,
                         const CodeParameters&) = default;
};

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000;  // maximum codewords enumerated
  unsigned workers = 1;
};

// Exhaustive enumeration of all q^k codewords. Throws kBudgetExceeded.
WeightDistribution BruteWeightDistribution(const LinearCode& code,
                                           const EnumerationOptions& options = {});

// Throws kZeroCode for k = 0.
std::size_t MinDistance(const LinearCode& code,
                        const EnumerationOptions& options = {});

// d from enumeration, d_perp from the MacWilliams transform of the
// distribution. Throws kZeroCode for k = 0.
CodeParameters Parameters(const LinearCode& code,
                          const EnumerationOptions& options = {});
CodeParameters ParametersFromDistribution(const WeightDistribution& a);

// B_j = q^-k sum_i A_i K_j(i), the distribution of the dual code.
// Throws kNonIntegralResult if any B_j is fractional or negative.
WeightDistribution MacWilliamsTransform(const WeightDistribution& a);

// Krawtchouk polynomial K_j(i) for length n over GF(q).
BigInt Krawtchouk(std::size_t n, std::uint32_t q, std::size_t j,
                  std::size_t i);

// Uniformly sampled full-rank k x n generator, deterministic in `seed`.
LinearCode RandomCode(const Field& field, std::size_t n, std::size_t k,
                      std::uint64_t seed);

}  // namespace wdist

#endif  // WDIST_CODE_HPP_
