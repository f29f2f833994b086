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

#include "wdist/moments.hpp"

#include <algorithm>
#include <string>

#include "wdist/error.hpp"

namespace wdist {

const char* SystemKindName(SystemKind kind) {
  switch (kind) {
    case SystemKind::kTruncatedPascal: return "pascal";
    case SystemKind::kPowerMoment: return "pless";
    case SystemKind::kExtremal: return "extremal";
  }
  return "unknown";
}

namespace {

std::vector<std::size_t> AllColumns(std::size_t n) {
  std::vector<std::size_t> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = i;
  return out;
}

long L(std::size_t x) { return static_cast<long>(x); }

}  // namespace

MomentSystem BuildPascalSystem(const CodeParameters& params) {
  const std::size_t n = params.n, k = params.k, dp = params.d_perp;
  MomentSystem out;
  out.kind = SystemKind::kTruncatedPascal;
  out.params = params;
  out.columns = AllColumns(n);
  out.matrix = RationalMatrix(dp, n + 1);
  for (std::size_t row = 0; row < dp; ++row) {
    const std::size_t nu = n - dp + 1 + row;
    out.rows.push_back({RowTag::Kind::kNu, L(nu)});
    for (std::size_t s = 0; s <= nu; ++s)
      out.matrix.at(row, s) = Rational(Binomial(L(n - s), L(nu - s)));
    out.rhs.emplace_back(Binomial(L(n), L(nu)) *
                         Power(params.q, nu + k - n));
  }
  return out;
}

MomentSystem BuildPlessSystem(const CodeParameters& params) {
  const std::size_t n = params.n, k = params.k, dp = params.d_perp;
  MomentSystem out;
  out.kind = SystemKind::kPowerMoment;
  out.params = params;
  out.columns = AllColumns(n);
  out.matrix = RationalMatrix(dp, n + 1);
  for (std::size_t nu = 0; nu < dp; ++nu) {
    out.rows.push_back({RowTag::Kind::kNu, L(nu)});
    for (std::size_t i = nu; i <= n; ++i)
      out.matrix.at(nu, i) = Rational(Binomial(L(i), L(nu)));
    out.rhs.emplace_back(Power(params.q, k - nu) * Binomial(L(n), L(nu)) *
                         Power(params.q - 1, nu));
  }
  return out;
}

std::vector<std::size_t> ViolatedRows(const MomentSystem& system,
                                      const WeightDistribution& a) {
  std::vector<Rational> x;
  x.reserve(system.columns.size());
  for (auto c : system.columns) x.emplace_back(a[c]);
  const auto lhs = system.matrix.Apply(x);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < lhs.size(); ++r)
    if (lhs[r] != system.rhs[r]) out.push_back(r);
  return out;
}

std::vector<Rational> SolveRational(const MomentSystem& system,
                                    const Knowns& knowns) {
  const std::size_t cols = system.columns.size();
  const std::size_t rows = system.rows.size();

  // Map weight index -> known value for the system's columns.
  std::vector<const BigInt*> known_at(cols, nullptr);
  for (const auto& [index, value] : knowns) {
    auto it = std::find(system.columns.begin(), system.columns.end(), index);
    if (it == system.columns.end())
      throw Error(ErrorCode::kInvalidArgument,
                  "known A_" + std::to_string(index) +
                      " is not an unknown of this system");
    if (value < 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "known A_" + std::to_string(index) + " is negative");
    known_at[static_cast<std::size_t>(it - system.columns.begin())] = &value;
  }
  std::vector<std::size_t> unknown;
  for (std::size_t c = 0; c < cols; ++c)
    if (!known_at[c]) unknown.push_back(c);
  if (unknown.size() > rows)
    throw Error(ErrorCode::kTooFewKnowns,
                std::to_string(unknown.size()) + " unknowns but only " +
                    std::to_string(rows) + " equations; need at least " +
                    std::to_string(cols - rows) + " knowns, got " +
                    std::to_string(cols - unknown.size()));

  // Augmented reduced system [A_U | b - A_K x_K].
  const std::size_t u = unknown.size();
  RationalMatrix aug(rows, u + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational rhs = system.rhs[r];
    for (std::size_t c = 0; c < cols; ++c)
      if (known_at[c] && system.matrix.at(r, c) != 0)
        rhs -= system.matrix.at(r, c) * Rational(*known_at[c]);
    for (std::size_t j = 0; j < u; ++j)
      aug.at(r, j) = system.matrix.at(r, unknown[j]);
    aug.at(r, u) = rhs;
  }
  const auto pivots = ReduceRowEchelon(aug, u);
  if (pivots.size() < u) {
    RationalMatrix reduced(rows, u);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < u; ++j)
        reduced.at(r, j) = system.matrix.at(r, unknown[j]);
    const auto local = RationalKernelVector(reduced);
    std::vector<Rational> witness(cols);
    for (std::size_t j = 0; j < u; ++j) witness[unknown[j]] = local[j];
    throw SingularError(ErrorCode::kSingularReducedSystem,
                        "reduced system has rank " +
                            std::to_string(pivots.size()) + " < " +
                            std::to_string(u) + " unknowns",
                        pivots.size(), std::move(witness));
  }
  for (std::size_t r = u; r < rows; ++r) {
    if (aug.at(r, u) != 0)
      throw Error(ErrorCode::kInconsistentKnowns,
                  "knowns are inconsistent with the equations (surplus "
                  "equation residual " +
                      ToDecimal(aug.at(r, u)) + ")");
  }
  std::vector<Rational> out(cols);
  for (std::size_t c = 0; c < cols; ++c)
    if (known_at[c]) out[c] = Rational(*known_at[c]);
  for (std::size_t j = 0; j < u; ++j) out[unknown[j]] = aug.at(j, u);
  return out;
}

WeightDistribution SolveWithKnowns(const MomentSystem& system,
                                   const Knowns& knowns) {
  const CodeParameters& p = system.params;
  if (system.columns != AllColumns(p.n))
    throw Error(ErrorCode::kInvalidArgument,
                "system does not carry all weights A_0..A_n");
  const auto x = SolveRational(system, knowns);
  std::vector<BigInt> counts(p.n + 1);
  for (std::size_t i = 0; i <= p.n; ++i) {
    if (!IsIntegral(x[i]))
      throw Error(ErrorCode::kNonIntegralSolution,
                  "A_" + std::to_string(i) + " = " + ToDecimal(x[i]) +
                      " is not an integer");
    if (x[i] < 0)
      throw Error(ErrorCode::kNegativeSolution,
                  "A_" + std::to_string(i) + " = " + ToDecimal(x[i]) +
                      " is negative");
    counts[i] = x[i].get_num();
  }
  return WeightDistribution(p.n, p.q, p.k, std::move(counts));
}

PlessCheck VerifyPlessFull(const WeightDistribution& a,
                           const WeightDistribution& b, std::size_t nu) {
  const std::size_t n = a.n();
  if (b.n() != n || a.q() != b.q())
    throw Error(ErrorCode::kInvalidArgument,
                "distributions have different lengths or fields");
  if (nu > n)
    throw Error(ErrorCode::kInvalidArgument, "nu exceeds the length");
  const std::uint32_t q = a.q();
  PlessCheck out;
  for (std::size_t i = nu; i <= n; ++i)
    out.lhs += Binomial(L(i), L(nu)) * a[i];
  BigInt sum = 0;
  for (std::size_t j = 0; j <= nu; ++j) {
    BigInt term = Binomial(L(n - j), L(n - nu)) * Power(q - 1, nu - j) * b[j];
    if (j % 2) sum -= term;
    else sum += term;
  }
  out.rhs = RationalPower(q, L(a.k()) - L(nu)) * Rational(sum);
  out.rhs.canonicalize();
  out.holds = Rational(out.lhs) == out.rhs;
  return out;
}

CrossCheck CrossCheckSystems(const CodeParameters& params,
                             const Knowns& knowns) {
  CrossCheck out;
  out.pascal = SolveRational(BuildPascalSystem(params), knowns);
  out.pless = SolveRational(BuildPlessSystem(params), knowns);
  out.agree = out.pascal == out.pless;
  return out;
}

RankReport RankRelationshipReport(const CodeParameters& params) {
  const MomentSystem pascal = BuildPascalSystem(params);
  const MomentSystem pless = BuildPlessSystem(params);
  RankReport out;
  out.pascal_rank = RationalRank(pascal.matrix);
  out.pless_rank = RationalRank(pless.matrix);
  RationalMatrix joint = pascal.matrix;
  joint.AppendRows(pless.matrix);
  out.joint_rank = RationalRank(joint);

  const std::size_t cols = params.n + 1;
  RationalMatrix augmented(joint.rows(), cols + 1);
  for (std::size_t r = 0; r < joint.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) augmented.at(r, c) = joint.at(r, c);
    augmented.at(r, cols) =
        r < pascal.rhs.size() ? pascal.rhs[r] : pless.rhs[r - pascal.rhs.size()];
  }
  out.joint_augmented_rank = RationalRank(augmented);
  return out;
}

}  // namespace wdist
