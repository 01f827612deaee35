// Copyright 2026 The CSG Solver Authors.
//
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

#ifndef CSG_LINALG_HPP
#define CSG_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "csg/rational.hpp"

namespace csg {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> entries() const { return data_; }

  /// Copy without row i and column j.
  RatMatrix minor(std::size_t i, std::size_t j) const;
  /// Submatrix on the given (sorted) row and column index sets.
  RatMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  RationalVector data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RationalVector operator*(const RatMatrix& a, std::span<const Rational> x);

/// Exact determinant: rows are scaled to integers and reduced with
/// fraction-free (Bareiss) elimination, then the scale is divided out.
Rational bareiss_det(const RatMatrix& m);

/// Integer-only Bareiss determinant. `m` is consumed (overwritten).
Integer bareiss_det_integer(std::vector<std::vector<Integer>> m);

/// Sum of all signed (k-1)x(k-1) minors, i.e. the sum of the entries of the
/// adjugate. The 1x1 case is 1 (the empty minor).
Rational signed_minor_sum(const RatMatrix& m);

/// Adjugate (transpose of the cofactor matrix).
RatMatrix adjugate(const RatMatrix& m);

/// Unique solution of m x = rhs. Throws Error("singular matrix") if m is
/// singular. The result is checked by substitution before returning.
RationalVector solve_linear(const RatMatrix& m, std::span<const Rational> rhs);

}  // namespace csg

#endif  // CSG_LINALG_HPP
