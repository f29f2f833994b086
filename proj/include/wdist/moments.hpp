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

#ifndef WDIST_MOMENTS_HPP_
#define WDIST_MOMENTS_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "wdist/bigint.hpp"
#include "wdist/code.hpp"
#include "wdist/matrix.hpp"

namespace wdist {

enum class SystemKind {
  // sum_s binom(n-s, nu-s) A_s = binom(n, nu) q^(nu+k-n), n - d_perp < nu <= n.
  kTruncatedPascal,
  // sum_i binom(i, nu) A_i = q^(k-nu) binom(n, nu) (q-1)^nu, 0 <= nu < d_perp.
  kPowerMoment,
  // Doubly-even self-dual extremal relations, see closed_forms.hpp.
  kExtremal,
};

const char* SystemKindName(SystemKind kind);

// Provenance of one equation: a value of nu, or the symmetry relation
// A_{4m+4l} = A_{20m-4l} for l = value.
struct RowTag {
  enum class Kind { kNu, kSymmetry };
  Kind kind = Kind::kNu;
  long value = 0;
  friend bool operator==(const RowTag&, const RowTag&) = default;
};

// matrix * (A_{columns[0]}, A_{columns[1]}, ...)^T = rhs.
struct MomentSystem {
  SystemKind kind = SystemKind::kTruncatedPascal;
  RationalMatrix matrix;
  std::vector<Rational> rhs;
  std::vector<RowTag> rows;
  std::vector<std::size_t> columns;  // weight index of each unknown slot
  CodeParameters params;
};

MomentSystem BuildPascalSystem(const CodeParameters& params);
MomentSystem BuildPlessSystem(const CodeParameters& params);

// Row indices of `system` that `a` violates.
std::vector<std::size_t> ViolatedRows(const MomentSystem& system,
                                      const WeightDistribution& a);

using Knowns = std::map<std::size_t, BigInt>;

// Substitutes the knowns and solves the remaining exact system, using a
// maximal nonsingular square subsystem and checking every surplus row.
// Returns one rational value per column of the system.
//
// Throws kTooFewKnowns (more unknowns than rows), SingularError with
// kSingularReducedSystem, or kInconsistentKnowns.
std::vector<Rational> SolveRational(const MomentSystem& system,
                                    const Knowns& knowns);

// SolveRational on a system whose columns are 0..n, followed by the
// integrality and sign checks (kNonIntegralSolution / kNegativeSolution).
WeightDistribution SolveWithKnowns(const MomentSystem& system,
                                   const Knowns& knowns);

struct PlessCheck {
  BigInt lhs;
  Rational rhs;
  bool holds = false;
};

// sum_{i>=nu} binom(i, nu) A_i
//   = q^(k-nu) sum_{j<=nu} (-1)^j binom(n-j, n-nu) (q-1)^(nu-j) B_j,
// with B the distribution of the dual code.
PlessCheck VerifyPlessFull(const WeightDistribution& a,
                           const WeightDistribution& b, std::size_t nu);

struct CrossCheck {
  std::vector<Rational> pascal;
  std::vector<Rational> pless;
  bool agree = false;
};

// Solves the truncated-Pascal and power-moment systems with the same knowns.
// Solutions are compared as rationals, so parameter sets that admit no code
// can legitimately disagree.
CrossCheck CrossCheckSystems(const CodeParameters& params,
                             const Knowns& knowns);

// Ranks of the two systems and of their stacked union. Pure evidence; no
// dependence between the families is assumed.
struct RankReport {
  std::size_t pascal_rank = 0;
  std::size_t pless_rank = 0;
  std::size_t joint_rank = 0;
  std::size_t joint_augmented_rank = 0;

  bool pascal_in_pless_span() const { return joint_rank == pless_rank; }
  bool pless_in_pascal_span() const { return joint_rank == pascal_rank; }
};

RankReport RankRelationshipReport(const CodeParameters& params);

}  // namespace wdist

#endif  // WDIST_MOMENTS_HPP_
