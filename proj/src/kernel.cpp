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


#include "csg/kernel.hpp"

#include <algorithm>

namespace csg {

RatMatrix discount_matrix(const InducedMC& mc) {
  const std::size_t n = mc.num_states();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational keep = 1 - mc.discount[i];
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Rational(1) : Rational(0)) - keep * mc.transition[i][j];
  }
  return m;
}

KernelEntry kernel_entry(const InducedMC& mc, std::size_t state) {
  if (state >= mc.num_states()) throw Error("state index out of range");
  RatMatrix m = discount_matrix(mc);
  KernelEntry e;
  e.nabla = bareiss_det(m);
  for (std::size_t i = 0; i < mc.num_states(); ++i) m(i, state) = mc.discount[i] * mc.reward[i];
  e.nabla_s = bareiss_det(m);
  return e;
}

KernelEntry kernel_entry(const Game& g, const DiscountSpec& disc, std::size_t state, const PureProfile& p1,
                         const PureProfile& p2) {
  return kernel_entry(induce_mc(g, to_mixed(g, p1), to_mixed(g, p2), disc), state);
}

RationalVector discounted_values(const InducedMC& mc) {
  RationalVector rhs(mc.num_states());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = mc.discount[i] * mc.reward[i];
  return solve_linear(discount_matrix(mc), rhs);
}

Rational discounted_payoff(const Game& g, const DiscountSpec& disc, std::size_t state, const MixedStationary& sigma,
                           const MixedStationary& tau) {
  if (state >= g.num_states()) throw Error("state index out of range");
  return discounted_values(induce_mc(g, sigma, tau, disc))[state];
}

KernelCache::KernelCache(const Game& g, const DiscountSpec& disc, std::size_t state)
    : rows_(enumerate_pure(g, Player::kOne)), cols_(enumerate_pure(g, Player::kTwo)) {
  validate_discount(g, disc);
  entries_.reserve(rows_.size() * cols_.size());
  for (const auto& r : rows_) {
    for (const auto& c : cols_) entries_.push_back(kernel_entry(g, disc, state, r, c));
  }
}

MatrixGame KernelCache::w(const Rational& z) const {
  RatMatrix m(rows_.size(), cols_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const KernelEntry& e = entry(i, j);
      m(i, j) = e.nabla_s - z * e.nabla;
    }
  }
  return {std::move(m)};
}

MatrixGame build_w(const Game& g, const DiscountSpec& disc, std::size_t state, const Rational& z) {
  return KernelCache(g, disc, state).w(z);
}

Rational profile_weight(const MixedStationary& strat, const PureProfile& p) {
  if (strat.player != p.player || strat.rows.size() != p.choice.size()) throw Error("strategy shape mismatch");
  Rational w = 1;
  for (std::size_t s = 0; s < p.choice.size(); ++s) w *= strat.rows[s].at(p.choice[s]);
  return w;
}

RatMatrix stage_matrix(const Game& g, const DiscountSpec& disc, std::size_t s, const RationalVector& v) {
  const Rational& lambda = disc.at(s);
  Rational keep = 1 - lambda;
  RatMatrix m(g.num_actions1(), g.num_actions2());
  for (std::size_t a = 0; a < g.num_actions1(); ++a) {
    for (std::size_t b = 0; b < g.num_actions2(); ++b) {
      Rational cont = 0;
      auto row = g.row(s, a, b);
      for (std::size_t t = 0; t < row.size(); ++t) {
        if (row[t] != 0) cont += row[t] * v[t];
      }
      m(a, b) = lambda * g.reward(s, a, b) + keep * cont;
    }
  }
  return m;
}

OracleResult value_iteration_oracle(const Game& g, const DiscountSpec& disc, const Rational& tol) {
  if (sgn(tol) <= 0) throw Error("oracle tolerance must be positive");
  validate_discount(g, disc);
  const std::size_t n = g.num_states();
  const Rational lmin = disc.min_factor();
  const Rational keep = 1 - lmin;

  // Grid 2^-p with 2^-p <= lmin^2 tol / 4 keeps the rounding noise well
  // below the stopping threshold lmin * tol.
  const Rational target = lmin * lmin * tol / 4;
  std::uint64_t p = 0;
  while (pow2(-static_cast<std::int64_t>(p)) > target) ++p;
  const Rational delta = pow2(-static_cast<std::int64_t>(p));
  const Rational threshold = tol * lmin;

  OracleResult out;
  RationalVector v(n, Rational(0));
  RationalVector next(n);
  Rational step;
  for (;;) {
    ++out.iterations;
    step = 0;
    for (std::size_t s = 0; s < n; ++s) {
      next[s] = floor_to_dyadic(game_value({stage_matrix(g, disc, s, v)}).value, p);
      step = std::max(step, Rational(abs(next[s] - v[s])));
    }
    std::swap(v, next);
    if (step <= threshold) break;
  }

  const Rational half = (keep * step + delta) / lmin;
  out.sigma.player = Player::kOne;
  out.tau.player = Player::kTwo;
  for (std::size_t s = 0; s < n; ++s) {
    out.intervals.push_back({std::max(Rational(0), Rational(v[s] - half)), std::min(Rational(1), Rational(v[s] + half))});
    GameSolution sol = game_value({stage_matrix(g, disc, s, v)});
    out.sigma.rows.push_back(sol.row_strategy);
    out.tau.rows.push_back(sol.col_strategy);
  }
  return out;
}

bool det_lower_bound_check(const InducedMC& mc) {
  Rational lmin = *std::min_element(mc.discount.begin(), mc.discount.end());
  return bareiss_det(discount_matrix(mc)) >= pow(lmin, mc.num_states());
}

}  // namespace csg
