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


#include "csg/matrix_game.hpp"

#include <algorithm>
#include <optional>

namespace csg {
namespace {

// Integer tableau: the true tableau is t / denom. Rows 0..r-1 are the
// constraints A u + s = 1, row r is the objective. Columns: c structural,
// r slack, then the right-hand side.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Integer>>& a, std::size_t r, std::size_t c)
      : r_(r), c_(c), width_(c + r + 1), t_((r + 1) * width_), basis_(r) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) at(i, j) = a[i][j];
      at(i, c + i) = 1;
      at(i, width_ - 1) = 1;
      basis_[i] = c + i;
    }
    for (std::size_t j = 0; j < c; ++j) at(r, j) = -1;
  }

  void solve() {
    while (auto col = entering()) {
      std::size_t row = leaving(*col);
      pivot(row, *col);
    }
  }

  // Optimal objective max sum(u).
  Rational objective() const {
    Rational v(at(r_, width_ - 1), denom_);
    v.canonicalize();
    return v;
  }

  RationalVector primal() const {
    RationalVector u(c_, Rational(0));
    for (std::size_t i = 0; i < r_; ++i) {
      if (basis_[i] < c_) u[basis_[i]] = Rational(at(i, width_ - 1), denom_);
    }
    for (auto& v : u) v.canonicalize();
    return u;
  }

  RationalVector dual() const {
    RationalVector w(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      w[i] = Rational(at(r_, c_ + i), denom_);
      w[i].canonicalize();
    }
    return w;
  }

 private:
  Integer& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  // Bland: lowest-index column with a negative reduced cost.
  std::optional<std::size_t> entering() const {
    for (std::size_t j = 0; j + 1 < width_; ++j) {
      if (sgn(at(r_, j)) < 0) return j;
    }
    return std::nullopt;
  }

  // Minimum ratio rhs / entry over positive entries; ties go to the lowest
  // basic variable index. The problem is bounded because every entry of A
  // is at least 1.
  std::size_t leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < r_; ++i) {
      if (sgn(at(i, col)) <= 0) continue;
      if (!best) {
        best = i;
        continue;
      }
      // rhs_i / a_i  vs  rhs_b / a_b, both denominators positive.
      int cmp_val = cmp(at(i, width_ - 1) * at(*best, col), at(*best, width_ - 1) * at(i, col));
      if (cmp_val < 0 || (cmp_val == 0 && basis_[i] < basis_[*best])) best = i;
    }
    if (!best) throw Error("simplex: unbounded direction in a bounded program");
    return *best;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const Integer p = at(pr, pc);
    for (std::size_t i = 0; i <= r_; ++i) {
      if (i == pr) continue;
      const Integer f = at(i, pc);
      if (f == 0) {
        // (t * p - 0) / denom keeps the row scaled to the new denominator.
        for (std::size_t j = 0; j < width_; ++j) {
          Integer& x = at(i, j);
          if (x == 0) continue;
          x *= p;
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), denom_.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = 0; j < width_; ++j) {
        Integer& x = at(i, j);
        x = x * p - f * at(pr, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), denom_.get_mpz_t());
      }
    }
    denom_ = p;
    basis_[pr] = pc;
  }

  std::size_t r_;
  std::size_t c_;
  std::size_t width_;
  std::vector<Integer> t_;
  std::vector<std::size_t> basis_;
  Integer denom_ = 1;
};

}  // namespace

Rational row_guarantee(const RatMatrix& m, const RationalVector& x) {
  std::optional<Rational> worst;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += x[i] * m(i, j);
    if (!worst || s < *worst) worst = s;
  }
  return *worst;
}

Rational col_guarantee(const RatMatrix& m, const RationalVector& y) {
  std::optional<Rational> worst;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * y[j];
    if (!worst || s > *worst) worst = s;
  }
  return *worst;
}

GameSolution game_value(const MatrixGame& g) {
  const RatMatrix& m = g.payoff;
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();

  // Pure saddle point: maximin over rows meets minimax over columns.
  std::size_t best_row = 0;
  std::size_t best_col = 0;
  Rational maximin;
  Rational minimax;
  for (std::size_t i = 0; i < r; ++i) {
    Rational lo = *std::min_element(m.row(i).begin(), m.row(i).end());
    if (i == 0 || lo > maximin) {
      maximin = lo;
      best_row = i;
    }
  }
  for (std::size_t j = 0; j < c; ++j) {
    Rational hi = m(0, j);
    for (std::size_t i = 1; i < r; ++i) hi = std::max(hi, m(i, j));
    if (j == 0 || hi < minimax) {
      minimax = hi;
      best_col = j;
    }
  }
  if (maximin == minimax) {
    GameSolution sol{maximin, RationalVector(r, Rational(0)), RationalVector(c, Rational(0))};
    sol.row_strategy[best_row] = 1;
    sol.col_strategy[best_col] = 1;
    return sol;
  }

  // Integer payoffs L*A, then a shift making every entry >= 1.
  Integer scale = common_denominator(m.entries());
  std::vector<std::vector<Integer>> a(r, std::vector<Integer>(c));
  Integer lowest;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
      if ((i == 0 && j == 0) || a[i][j] < lowest) lowest = a[i][j];
    }
  }
  Integer shift = lowest < 1 ? Integer(1 - lowest) : Integer(0);
  if (shift != 0) {
    for (auto& row : a) {
      for (auto& v : row) v += shift;
    }
  }

  Tableau tab(a, r, c);
  tab.solve();
  Rational opt = tab.objective();
  Rational shifted_value = 1 / opt;

  GameSolution sol;
  sol.value = (shifted_value - Rational(shift)) / Rational(scale);
  sol.col_strategy = tab.primal();
  for (auto& v : sol.col_strategy) v *= shifted_value;
  sol.row_strategy = tab.dual();
  for (auto& v : sol.row_strategy) v *= shifted_value;

  if (row_guarantee(m, sol.row_strategy) != sol.value || col_guarantee(m, sol.col_strategy) != sol.value) {
    throw Error("matrix game: strategies fail to certify the value");
  }
  return sol;
}

namespace {

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

SnowWitness shapley_snow_witness(const MatrixGame& g) {
  const RatMatrix& m = g.payoff;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    auto rows = first_combination(k);
    do {
      auto cols = first_combination(k);
      do {
        RatMatrix sub = m.submatrix(rows, cols);
        RatMatrix adj = adjugate(sub);
        Rational s = 0;
        for (const auto& v : adj.entries()) s += v;
        if (s == 0) continue;
        Rational det = bareiss_det(sub);
        Rational v = det / s;

        RationalVector x(m.rows(), Rational(0));
        RationalVector y(m.cols(), Rational(0));
        bool nonneg = true;
        for (std::size_t a = 0; a < k && nonneg; ++a) {
          Rational xs = 0;
          Rational ys = 0;
          for (std::size_t b = 0; b < k; ++b) {
            xs += adj(b, a);
            ys += adj(a, b);
          }
          x[rows[a]] = xs / s;
          y[cols[a]] = ys / s;
          nonneg = sgn(x[rows[a]]) >= 0 && sgn(y[cols[a]]) >= 0;
        }
        if (!nonneg) continue;
        if (row_guarantee(m, x) >= v && col_guarantee(m, y) <= v) return {rows, cols, det, s};
      } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
  }
  throw Error("no Shapley-Snow kernel found");
}

}  // namespace csg
