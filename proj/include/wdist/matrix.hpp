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

#ifndef WDIST_MATRIX_HPP_
#define WDIST_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wdist/bigint.hpp"
#include "wdist/field.hpp"

namespace wdist {

// Dense row-major matrix over GF(q); entries are canonical encodings.
class CodeMatrix {
 public:
  CodeMatrix(Field field, std::size_t rows, std::size_t cols);

  // Throws kInvalidArgument on ragged rows or out-of-range entries.
  static CodeMatrix FromRows(Field field,
                             const std::vector<std::vector<std::uint32_t>>& rows,
                             std::size_t cols_if_empty = 0);
  static CodeMatrix Identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t value);
  FieldElement element(std::size_t r, std::size_t c) const {
    return FieldElement(field_, at(r, c));
  }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> mutable_row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }

  friend bool operator==(const CodeMatrix& a, const CodeMatrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
};

// Brings `m` to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> ReduceRowEchelon(CodeMatrix& m);

std::size_t GfRank(const CodeMatrix& m);

// Rows form a basis of {v : M v^T = 0}; cols - rank rows.
CodeMatrix GfKernelBasis(const CodeMatrix& m);

// M_[I]: the columns listed in `indices` (0-based), in that order. Throws
// kIndexOutOfRange or kDuplicateIndex.
CodeMatrix SelectColumns(const CodeMatrix& m,
                         std::span<const std::size_t> indices);

// a * b^T. Throws kFieldMismatch / kInvalidArgument on shape mismatch.
CodeMatrix MultiplyTransposed(const CodeMatrix& a, const CodeMatrix& b);

// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  // Appends the rows of `other`; column counts must match.
  void AppendRows(const RationalMatrix& other);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }
  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  std::vector<Rational> Apply(std::span<const Rational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Gauss-Jordan over Q restricted to the first `cols` columns (later columns
// ride along, e.g. an augmented right-hand side). Returns pivot columns.
std::vector<std::size_t> ReduceRowEchelon(RationalMatrix& m, std::size_t cols);

std::size_t RationalRank(const RationalMatrix& a);

// A nonzero vector in the right kernel of `a`, or empty if the kernel is
// trivial.
std::vector<Rational> RationalKernelVector(const RationalMatrix& a);

Rational Determinant(const RationalMatrix& a);

// Unique x with A x = b for square A. Throws SingularError(kSingularMatrix)
// carrying the rank and a kernel witness when A is singular.
std::vector<Rational> SolveExact(const RationalMatrix& a,
                                 std::span<const Rational> b);

// P_{r,t}: r x (t+1) with entry (i, j) = binom(t - j, i).
RationalMatrix TruncatedPascal(std::size_t r, std::size_t t);

// True iff every r x r minor of P_{r,t} is nonzero.
bool PascalMinorCheck(std::size_t r, std::size_t t);

}  // namespace wdist

#endif  // WDIST_MATRIX_HPP_
