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

#include "wdist/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wdist/error.hpp"

namespace wdist {

CodeMatrix::CodeMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, 0) {}

CodeMatrix CodeMatrix::FromRows(
    Field field, const std::vector<std::vector<std::uint32_t>>& rows,
    std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  CodeMatrix out(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::kInvalidArgument,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
  }
  return out;
}

CodeMatrix CodeMatrix::Identity(Field field, std::size_t n) {
  CodeMatrix out(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = 1;
  return out;
}

void CodeMatrix::set(std::size_t r, std::size_t c, std::uint32_t value) {
  if (r >= rows_ || c >= cols_)
    throw Error(ErrorCode::kIndexOutOfRange, "matrix index out of range");
  if (value >= field_.q())
    throw Error(ErrorCode::kInvalidArgument,
                "entry " + std::to_string(value) + " outside GF(" +
                    std::to_string(field_.q()) + ")");
  entries_[r * cols_ + c] = value;
}

bool operator==(const CodeMatrix& a, const CodeMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::vector<std::size_t> ReduceRowEchelon(CodeMatrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      auto a = m.mutable_row(pivot);
      auto b = m.mutable_row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.mutable_row(lead);
    const std::uint32_t inv = f.Inv(prow[c]);
    for (auto& x : prow) x = f.Mul(x, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, c) == 0) continue;
      auto row = m.mutable_row(r);
      const std::uint32_t factor = f.Neg(row[c]);
      for (std::size_t j = c; j < m.cols(); ++j)
        row[j] = f.Add(row[j], f.Mul(factor, prow[j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t GfRank(const CodeMatrix& m) {
  CodeMatrix work = m;
  return ReduceRowEchelon(work).size();
}

CodeMatrix GfKernelBasis(const CodeMatrix& m) {
  CodeMatrix work = m;
  const auto pivots = ReduceRowEchelon(work);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  CodeMatrix basis(f, m.cols() - pivots.size(), m.cols());
  std::size_t out_row = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(out_row, free, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.set(out_row, pivots[i], f.Neg(work.at(i, free)));
    ++out_row;
  }
  return basis;
}

CodeMatrix SelectColumns(const CodeMatrix& m,
                         std::span<const std::size_t> indices) {
  std::vector<bool> seen(m.cols(), false);
  for (auto c : indices) {
    if (c >= m.cols())
      throw Error(ErrorCode::kIndexOutOfRange,
                  "column " + std::to_string(c) + " out of range");
    if (seen[c])
      throw Error(ErrorCode::kDuplicateIndex,
                  "column " + std::to_string(c) + " selected twice");
    seen[c] = true;
  }
  CodeMatrix out(m.field(), m.rows(), indices.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < indices.size(); ++j)
      out.set(r, j, m.at(r, indices[j]));
  return out;
}

CodeMatrix MultiplyTransposed(const CodeMatrix& a, const CodeMatrix& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
  if (a.cols() != b.cols())
    throw Error(ErrorCode::kInvalidArgument, "column counts differ");
  const Field& f = a.field();
  CodeMatrix out(f, a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      std::uint32_t acc = 0;
      for (std::size_t c = 0; c < a.cols(); ++c)
        acc = f.Add(acc, f.Mul(a.at(i, c), b.at(j, c)));
      out.set(i, j, acc);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::Identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

void RationalMatrix::AppendRows(const RationalMatrix& other) {
  if (rows_ == 0 && cols_ == 0) {
    *this = other;
    return;
  }
  if (other.cols_ != cols_)
    throw Error(ErrorCode::kInvalidArgument, "column counts differ");
  entries_.insert(entries_.end(), other.entries_.begin(),
                  other.entries_.end());
  rows_ += other.rows_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::kInvalidArgument, "shape mismatch in product");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::Apply(std::span<const Rational> x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * x[j];
  return out;
}

std::vector<std::size_t> ReduceRowEchelon(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(lead, j));
    const Rational inv = 1 / m.at(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, c) == 0) continue;
      const Rational factor = m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(r, j) -= factor * m.at(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

namespace {

std::vector<Rational> KernelFromReduced(const RationalMatrix& reduced,
                                        const std::vector<std::size_t>& pivots,
                                        std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -reduced.at(i, free);
    return v;
  }
  return {};
}

}  // namespace

std::size_t RationalRank(const RationalMatrix& a) {
  RationalMatrix work = a;
  return ReduceRowEchelon(work, a.cols()).size();
}

std::vector<Rational> RationalKernelVector(const RationalMatrix& a) {
  RationalMatrix work = a;
  const auto pivots = ReduceRowEchelon(work, a.cols());
  return KernelFromReduced(work, pivots, a.cols());
}

Rational Determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  RationalMatrix m = a;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m.at(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      const Rational factor = m.at(r, c) / m.at(c, c);
      for (std::size_t j = c; j < n; ++j) m.at(r, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

std::vector<Rational> SolveExact(const RationalMatrix& a,
                                 std::span<const Rational> b) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::kInvalidArgument, "SolveExact needs a square matrix");
  if (b.size() != a.rows())
    throw Error(ErrorCode::kInvalidArgument, "right-hand side length mismatch");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  const auto pivots = ReduceRowEchelon(aug, n);
  if (pivots.size() < n) {
    throw SingularError(ErrorCode::kSingularMatrix,
                        "matrix is singular (rank " +
                            std::to_string(pivots.size()) + " of " +
                            std::to_string(n) + ")",
                        pivots.size(), KernelFromReduced(aug, pivots, n));
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
  return x;
}

RationalMatrix TruncatedPascal(std::size_t r, std::size_t t) {
  if (r == 0 || r > t + 1)
    throw Error(ErrorCode::kInvalidArgument,
                "truncated Pascal matrix needs 1 <= r <= t+1");
  RationalMatrix out(r, t + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j <= t; ++j)
      out.at(i, j) = Rational(Binomial(static_cast<long>(t - j),
                                       static_cast<long>(i)));
  return out;
}

bool PascalMinorCheck(std::size_t r, std::size_t t) {
  const RationalMatrix p = TruncatedPascal(r, t);
  const std::size_t cols = t + 1;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  RationalMatrix minor(r, r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) minor.at(i, j) = p.at(i, pick[j]);
    if (Determinant(minor) == 0) return false;
    // Next r-subset of {0..cols-1} in lexicographic order.
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == cols - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace wdist
