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


#ifndef CSG_LIMIT_HPP
#define CSG_LIMIT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "csg/discounted.hpp"
#include "csg/game.hpp"

namespace csg {

/// Maps each state to a discount index in [0, d).
struct Assignment {
  std::size_t d = 1;
  std::vector<std::size_t> index;
};

void validate_assignment(const Game& g, const Assignment& chi);

struct LimitConstants {
  Integer D;                        // m^n
  Integer B1;
  std::uint64_t kappa = 0;          // eps rounded down to 2^-kappa
  std::vector<Integer> exponents;   // lambda_i = 2^-exponents[i]
  std::vector<Rational> lambdas;

  DiscountSpec discount(const Assignment& chi) const;
};

/// Smallest kappa >= 1 with 2^-kappa <= eps.
std::uint64_t kappa_for(const Rational& eps);

/// Constants from the raw parameters (n, m, d, B, kappa). Lambdas are only
/// materialized when `materialize` is set, since their size is
/// double-exponential in d.
LimitConstants limit_constants(std::uint64_t n, std::uint64_t m, std::uint64_t d, std::uint64_t b,
                               std::uint64_t kappa, bool materialize = true);
LimitConstants limit_constants(const Game& g, const Assignment& chi, const Rational& eps);

struct SizeCap {
  std::size_t n = 3;
  std::size_t m = 2;
  std::size_t d = 2;
};

/// Throws CapExceeded if the instance is too large for exact constants.
void check_exact_cap(const Game& g, const Assignment& chi, const SizeCap& cap);

/// Discounted approximation at the limit constants with error eps / 2,
/// where eps is first rounded down to a power of two.
DiscountedResult approx_limit(const Game& g, std::size_t state, const Assignment& chi, const Rational& eps);

/// Which discount index the most important (smallest) priority receives.
/// Outermost maps it to the largest factor lambda_1.
enum class PriorityOrder { kOutermost, kInnermost };

struct ParityReduction {
  Game game;  // rewards 1 on even priorities, 0 on odd
  Assignment chi;
};

/// Distinct priorities are ranked so d equals their number.
ParityReduction parity_to_limit(const Game& g, PriorityOrder order = PriorityOrder::kOutermost);

DiscountedResult approx_parity(const Game& g, std::size_t state, const Rational& eps,
                               PriorityOrder order = PriorityOrder::kOutermost);

/// Heuristic: discounted values on a decreasing ladder of lambda with
/// lambda_i = lambda^i, extrapolated linearly to lambda = 0 from the last
/// two rungs.
struct LadderResult {
  std::vector<Rational> ladder;
  std::vector<DiscountedResult> rungs;
  Rational estimate;
};

std::vector<Rational> default_ladder();
void validate_ladder(const std::vector<Rational>& ladder);
Rational extrapolate_to_zero(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2);
LadderResult ladder_limit(const Game& g, std::size_t state, const Assignment& chi,
                          const std::vector<Rational>& ladder, const Rational& eps);

}  // namespace csg

#endif  // CSG_LIMIT_HPP
