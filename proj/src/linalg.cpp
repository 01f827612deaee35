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

#include "csg/linalg.hpp"

#include <utility>

namespace csg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw Error("matrix dimensions must be positive");
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t k) {
  RatMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::minor(std::size_t i, std::size_t j) const {
  RatMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == j) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

RatMatrix RatMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  RatMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalVector operator*(const RatMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw Error("matrix-vector shape mismatch");
  RationalVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

namespace {

// Scales each row to integers; returns the product of the row scales.
Integer integer_rows(const RatMatrix& m, std::vector<std::vector<Integer>>& out) {
  Integer scale = 1;
  out.assign(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = common_denominator(m.row(i));
    scale *= l;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m(i, j);
      out[i][j] = v.get_num() * (l / v.get_den());
    }
  }
  return scale;
}

}  // namespace

Integer bareiss_det_integer(std::vector<std::vector<Integer>> a) {
  const std::size_t k = a.size();
  if (k == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < k && a[swap][p] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(a[p], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        Integer& x = a[i][j];
        x = x * a[p][p] - a[i][p] * a[p][j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[p][p];
  }
  Integer det = a[k - 1][k - 1];
  return sign < 0 ? Integer(-det) : det;
}

Rational bareiss_det(const RatMatrix& m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  std::vector<std::vector<Integer>> a;
  Integer scale = integer_rows(m, a);
  Rational det(bareiss_det_integer(std::move(a)), scale);
  det.canonicalize();
  return det;
}

RatMatrix adjugate(const RatMatrix& m) {
  if (!m.square()) throw Error("adjugate of a non-square matrix");
  const std::size_t k = m.rows();
  RatMatrix adj(k, k);
  if (k == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational c = bareiss_det(m.minor(i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? c : Rational(-c);
    }
  }
  return adj;
}

Rational signed_minor_sum(const RatMatrix& m) {
  if (!m.square()) throw Error("signed minor sum of a non-square matrix");
  RatMatrix adj = adjugate(m);
  Rational sum = 0;
  for (const auto& v : adj.entries()) sum += v;
  return sum;
}

RationalVector solve_linear(const RatMatrix& m, std::span<const Rational> rhs) {
  if (!m.square()) throw Error("linear solve needs a square matrix");
  const std::size_t k = m.rows();
  if (rhs.size() != k) throw Error("right-hand side has the wrong length");

  // Augmented integer system [A | b], each row scaled independently.
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    Integer l = common_denominator(m.row(i));
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[i].get_den_mpz_t());
    for (std::size_t j = 0; j < k; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    a[i][k] = rhs[i].get_num() * (l / rhs[i].get_den());
  }

  // Fraction-free forward elimination; pivot on the first nonzero entry.
  Integer prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < k && a[swap][p] == 0) ++swap;
      if (swap == k) throw Error("singular matrix");
      std::swap(a[p], a[swap]);
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j <= k; ++j) {
        Integer& x = a[i][j];
        x = x * a[p][p] - a[i][p] * a[p][j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }

  RationalVector x(k);
  for (std::size_t ii = k; ii-- > 0;) {
    Rational acc(a[ii][k]);
    for (std::size_t j = ii + 1; j < k; ++j) acc -= Rational(a[ii][j]) * x[j];
    x[ii] = acc / Rational(a[ii][ii]);
  }

  RationalVector check = m * std::span<const Rational>(x);
  for (std::size_t i = 0; i < k; ++i) {
    if (check[i] != rhs[i]) throw Error("linear solve failed its substitution check");
  }
  return x;
}

}  // namespace csg
