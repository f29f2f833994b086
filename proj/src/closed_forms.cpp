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

#include <string>

#include "wdist/error.hpp"

namespace wdist {

namespace {
long L(std::size_t x) { return static_cast<long>(x); }
}  // namespace

WeightDistribution MdsDistribution(std::size_t n, std::size_t k,
                                   std::uint32_t q) {
  if (k < 1 || k > n)
    throw Error(ErrorCode::kInvalidArgument, "MDS parameters need 1 <= k <= n");
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be >= 2");
  const std::size_t d = n - k + 1;
  std::vector<BigInt> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t w = d; w <= n; ++w) {
    BigInt sum = 0;
    for (std::size_t j = 0; j <= w - d; ++j) {
      BigInt term = Binomial(L(w), L(j)) * (Power(q, w - d + 1 - j) - 1);
      if (j % 2) sum -= term;
      else sum += term;
    }
    a[w] = Binomial(L(n), L(w)) * sum;
  }
  return WeightDistribution(n, q, k, std::move(a));
}

WeightDistribution NmdsDistribution(std::size_t n, std::size_t k,
                                    std::uint32_t q, const BigInt& a_d) {
  if (k < 1 || k >= n)
    throw Error(ErrorCode::kInvalidArgument, "NMDS parameters need 0 < k < n");
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be >= 2");
  if (a_d < 0)
    throw Error(ErrorCode::kInvalidArgument, "A_{n-k} must be nonnegative");
  std::vector<BigInt> a(n + 1, 0);
  a[0] = 1;
  a[n - k] = a_d;
  for (std::size_t i = 1; i <= k; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      BigInt term = Binomial(L(n - k + i), L(j)) * (Power(q, i - j) - 1);
      if (j % 2) sum -= term;
      else sum += term;
    }
    BigInt value = Binomial(L(n), L(k - i)) * sum;
    BigInt tail = Binomial(L(k), L(i)) * a_d;
    if (i % 2) value -= tail;
    else value += tail;
    a[n - k + i] = value;
  }
  return WeightDistribution(n, q, k, std::move(a));
}

void AmdsInput::Validate() const {
  if (k < 1 || k >= n)
    throw Error(ErrorCode::kInvalidArgument, "AMDS parameters need 0 < k < n");
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be >= 2");
  if (sigma < 2 || sigma > k + 1)
    throw Error(ErrorCode::kInvalidArgument,
                "sigma = " + std::to_string(sigma) +
                    " violates 2 <= sigma <= k+1");
  if (seed_weights.size() != sigma - 1)
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(sigma - 1) + " seed weights, got " +
                    std::to_string(seed_weights.size()));
  for (const auto& s : seed_weights)
    if (s < 0)
      throw Error(ErrorCode::kInvalidArgument, "seed weights must be >= 0");
}

WeightDistribution AmdsDistribution(const AmdsInput& in) {
  in.Validate();
  const std::size_t n = in.n, k = in.k, sigma = in.sigma;
  const std::size_t top = k - sigma + 1;  // last row/column index of P
  std::vector<BigInt> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t h = 0; h + 1 < sigma; ++h) a[n - k + h] = in.seed_weights[h];

  // Right-hand side of the triangular system P x = b.
  std::vector<BigInt> b(top + 1);
  for (std::size_t j = 0; j <= top; ++j) {
    b[j] = Binomial(L(n), L(n - k + sigma - 1 + j)) *
           (Power(in.q, j + sigma - 1) - 1);
    for (std::size_t h = 0; h + 1 < sigma; ++h)
      b[j] -= Binomial(L(k - h), L(sigma - 1 + j - h)) * a[n - k + h];
  }
  for (std::size_t i = 0; i <= top; ++i) {
    BigInt value = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      BigInt term = Binomial(L(top - j), L(i - j)) * b[j];
      if ((i - j) % 2) value -= term;
      else value += term;
    }
    const std::size_t w = n - k + sigma - 1 + i;
    if (value < 0)
      throw Error(ErrorCode::kNegativeEntry,
                  "A_" + std::to_string(w) + " = " + ToDecimal(value) +
                      " is negative; no code has these seed weights");
    a[w] = value;
  }
  return WeightDistribution(n, in.q, k, std::move(a));
}

RationalMatrix AmdsPascal(std::size_t k, std::size_t sigma) {
  if (sigma > k + 1)
    throw Error(ErrorCode::kInvalidArgument, "sigma exceeds k+1");
  const std::size_t size = k - sigma + 2;
  const std::size_t top = size - 1;
  RationalMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out.at(i, j) = Rational(Binomial(L(top - j), L(i - j)));
  return out;
}

RationalMatrix PascalInverse(std::size_t size, std::size_t k,
                             std::size_t sigma) {
  if (sigma > k + 1 || size != k - sigma + 2)
    throw Error(ErrorCode::kInvalidArgument,
                "inverse Pascal matrix needs size = k - sigma + 2");
  const std::size_t top = size - 1;
  RationalMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational v(Binomial(L(top - j), L(i - j)));
      out.at(i, j) = (i - j) % 2 ? Rational(-v) : v;
    }
  return out;
}

std::vector<std::size_t> ExtremalNuRange(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t nu = 24 * m; nu > 20 * m - 4; --nu) out.push_back(nu);
  return out;
}

MomentSystem ExtremalSystem(std::size_t m, const std::vector<std::size_t>& nus,
                            bool include_symmetry) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  const std::size_t n = 24 * m;
  const std::size_t unknowns = 4 * m - 1;
  MomentSystem out;
  out.kind = SystemKind::kExtremal;
  out.params = CodeParameters::Make(n, 12 * m, 2, 4 * m + 4, 4 * m + 4);
  for (std::size_t l = 1; l <= unknowns; ++l) out.columns.push_back(4 * m + 4 * l);

  const std::size_t symmetry_rows = include_symmetry ? 2 * m - 1 : 0;
  out.matrix = RationalMatrix(nus.size() + symmetry_rows, unknowns);
  std::size_t row = 0;
  for (auto nu : nus) {
    if (nu <= 20 * m - 4 || nu > n)
      throw Error(ErrorCode::kRangeViolation,
                  "nu = " + std::to_string(nu) + " outside (" +
                      std::to_string(20 * m - 4) + ", " + std::to_string(n) +
                      "]");
    out.rows.push_back({RowTag::Kind::kNu, L(nu)});
    for (std::size_t l = 1; l <= unknowns; ++l) {
      const long lower = L(nu) - L(4 * m + 4 * l);
      out.matrix.at(row, l - 1) = Rational(Binomial(L(20 * m - 4 * l), lower));
    }
    out.rhs.emplace_back(Binomial(L(n), L(nu)) * (Power(2, nu - 12 * m) - 1) -
                         KroneckerDelta(L(n), L(nu)));
    ++row;
  }
  for (std::size_t l = 1; l <= symmetry_rows; ++l) {
    out.rows.push_back({RowTag::Kind::kSymmetry, L(l)});
    // A_{4m+4l} is column l-1; A_{20m-4l} is column 4m-1-l.
    out.matrix.at(row, l - 1) = 1;
    out.matrix.at(row, unknowns - l) = -1;
    out.rhs.emplace_back(0);
    ++row;
  }
  return out;
}

namespace {

// Expands a solution of the extremal unknowns into a full distribution and
// checks it against every relation. Returns an empty string on success.
std::string CheckExtremal(std::size_t m, const std::vector<Rational>& x,
                          std::vector<BigInt>& counts) {
  const std::size_t n = 24 * m;
  counts.assign(n + 1, 0);
  counts[0] = 1;
  counts[n] = 1;
  for (std::size_t l = 1; l <= 4 * m - 1; ++l) {
    const Rational& v = x[l - 1];
    if (!IsIntegral(v) || v < 0)
      return "A_" + std::to_string(4 * m + 4 * l) + " = " + ToDecimal(v) +
             " is not a nonnegative integer";
    counts[4 * m + 4 * l] = v.get_num();
  }
  const MomentSystem all = ExtremalSystem(m, ExtremalNuRange(m), true);
  const auto lhs = all.matrix.Apply(x);
  for (std::size_t r = 0; r < lhs.size(); ++r)
    if (lhs[r] != all.rhs[r])
      return std::string(all.rows[r].kind == RowTag::Kind::kNu ? "relation nu = "
                                                               : "symmetry l = ") +
             std::to_string(all.rows[r].value) + " fails";
  BigInt total = 0;
  for (const auto& c : counts) total += c;
  if (total != Power(2, 12 * m)) return "sum of A_i differs from 2^(12m)";
  return {};
}

}  // namespace

WeightDistribution ExtremalDistribution(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  const std::vector<std::size_t> range = ExtremalNuRange(m);
  const std::size_t want = 4 * m - 1;

  // Selections as index sets into `range`, default (largest nu) first, then
  // lexicographic.
  std::vector<std::size_t> pick(want);
  for (std::size_t i = 0; i < want; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> nus;
    for (auto i : pick) nus.push_back(range[i]);
    const MomentSystem system = ExtremalSystem(m, nus, false);
    try {
      const auto x = SolveExact(system.matrix, system.rhs);
      std::vector<BigInt> counts;
      const std::string problem = CheckExtremal(m, x, counts);
      if (!problem.empty())
        throw Error(ErrorCode::kInconsistentKnowns,
                    "extremal solution inconsistent: " + problem);
      return WeightDistribution(24 * m, 2, 12 * m, std::move(counts));
    } catch (const SingularError&) {
    }
    std::size_t i = want;
    while (i > 0 && pick[i - 1] == range.size() - want + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < want; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw Error(ErrorCode::kSingularSelection,
              "every selection of " + std::to_string(want) +
                  " extremal relations is singular");
}

}  // namespace wdist
