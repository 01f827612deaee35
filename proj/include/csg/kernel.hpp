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


#ifndef CSG_KERNEL_HPP
#define CSG_KERNEL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "csg/game.hpp"
#include "csg/linalg.hpp"
#include "csg/matrix_game.hpp"

namespace csg {

/// Cramer pair for one pure profile: value at `state` is nabla_s / nabla.
struct KernelEntry {
  Rational nabla_s;
  Rational nabla;

  Rational ratio() const { return nabla_s / nabla; }
};

/// Id - ((1 - Lambda) 1^T) .* P for a chain.
RatMatrix discount_matrix(const InducedMC& mc);

KernelEntry kernel_entry(const InducedMC& mc, std::size_t state);
KernelEntry kernel_entry(const Game& g, const DiscountSpec& disc, std::size_t state, const PureProfile& p1,
                         const PureProfile& p2);

/// Exact stateful-discounted values of a chain, one per state.
RationalVector discounted_values(const InducedMC& mc);

Rational discounted_payoff(const Game& g, const DiscountSpec& disc, std::size_t state, const MixedStationary& sigma,
                           const MixedStationary& tau);

/// Kernel entries for every pair of pure profiles at one state. W(z) is
/// rebuilt from the cache with one multiply-subtract per entry.
class KernelCache {
 public:
  KernelCache(const Game& g, const DiscountSpec& disc, std::size_t state);

  const std::vector<PureProfile>& rows() const { return rows_; }
  const std::vector<PureProfile>& cols() const { return cols_; }
  const KernelEntry& entry(std::size_t i, std::size_t j) const { return entries_[i * cols_.size() + j]; }

  MatrixGame w(const Rational& z) const;

 private:
  std::vector<PureProfile> rows_;
  std::vector<PureProfile> cols_;
  std::vector<KernelEntry> entries_;
};

MatrixGame build_w(const Game& g, const DiscountSpec& disc, std::size_t state, const Rational& z);

/// Product weight of a pure profile under a mixed strategy.
Rational profile_weight(const MixedStationary& strat, const PureProfile& p);

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

struct OracleResult {
  std::vector<Interval> intervals;  // per state
  MixedStationary sigma;            // stage-game optimal at the last iterate
  MixedStationary tau;
  std::size_t iterations = 0;
};

/// Shapley value iteration from v = 0 on a dyadic grid fine enough that the
/// final intervals have half-width at most tol. Intervals are certified by
/// the contraction factor 1 - min lambda.
OracleResult value_iteration_oracle(const Game& g, const DiscountSpec& disc, const Rational& tol);

/// Stage matrix game Lambda r + (1 - Lambda) P v at state s.
RatMatrix stage_matrix(const Game& g, const DiscountSpec& disc, std::size_t s, const RationalVector& v);

/// det(Id - ((1 - Lambda) 1^T) .* P) >= (min lambda)^n.
bool det_lower_bound_check(const InducedMC& mc);

}  // namespace csg

#endif  // CSG_KERNEL_HPP
