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


#ifndef CSG_MATRIX_GAME_HPP
#define CSG_MATRIX_GAME_HPP

#include <cstddef>
#include <vector>

#include "csg/linalg.hpp"

namespace csg {

/// Zero-sum matrix game; the row player maximizes.
struct MatrixGame {
  RatMatrix payoff;
};

struct GameSolution {
  Rational value;
  RationalVector row_strategy;
  RationalVector col_strategy;
};

/// Exact value and a pair of optimal mixed strategies. Solved with an
/// integer-preserving simplex (Bland's rule). The returned strategies are
/// checked against every pure reply before returning.
GameSolution game_value(const MatrixGame& g);

/// Worst-case payoff of `x` over all columns.
Rational row_guarantee(const RatMatrix& m, const RationalVector& x);
/// Worst-case payoff of `y` over all rows.
Rational col_guarantee(const RatMatrix& m, const RationalVector& y);

struct SnowWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational det;
  Rational minor_sum;

  Rational ratio() const { return det / minor_sum; }
};

/// First square submatrix (by size, then lexicographic rows and columns)
/// with nonzero signed minor sum whose equalizing strategies are optimal in
/// the full game. Its det / S equals the game value.
SnowWitness shapley_snow_witness(const MatrixGame& g);

}  // namespace csg

#endif  // CSG_MATRIX_GAME_HPP
