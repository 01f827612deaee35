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


#include "csg/limit.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace csg {

void validate_assignment(const Game& g, const Assignment& chi) {
  if (chi.d == 0) throw ValidationError("assignment needs at least one discount index");
  if (chi.index.size() != g.num_states()) throw ValidationError("assignment must cover every state");
  for (std::size_t i : chi.index) {
    if (i >= chi.d) throw ValidationError("assignment index out of range");
  }
}

DiscountSpec LimitConstants::discount(const Assignment& chi) const {
  if (lambdas.size() != chi.d) throw Error("limit constants were not materialized for this assignment");
  return DiscountSpec{lambdas, chi.index};
}

std::uint64_t kappa_for(const Rational& eps) {
  if (sgn(eps) <= 0) throw Error("epsilon must be positive");
  std::uint64_t k = 1;
  while (pow2(-static_cast<std::int64_t>(k)) > eps) ++k;
  return k;
}

LimitConstants limit_constants(std::uint64_t n, std::uint64_t m, std::uint64_t d, std::uint64_t b,
                               std::uint64_t kappa, bool materialize) {
  if (n == 0 || m == 0 || d == 0) throw Error("limit constants need n, m, d >= 1");
  LimitConstants c;
  c.kappa = kappa;
  mpz_ui_pow_ui(c.D.get_mpz_t(), m, n);
  Integer nn(static_cast<unsigned long>(n));
  c.B1 = Integer(11) * c.D * nn *
         (Integer(static_cast<unsigned long>(b)) + Integer(static_cast<unsigned long>(bit_size(nn))) +
          Integer(static_cast<unsigned long>(bit_size(c.D))) + Integer(static_cast<unsigned long>(kappa)));
  Integer growth = nn * c.D + 1;
  Integer e = c.B1;
  for (std::uint64_t i = 0; i < d; ++i) {
    c.exponents.push_back(e);
    e *= growth;
  }
  if (materialize) {
    for (const auto& x : c.exponents) {
      if (!x.fits_slong_p() || x > Integer(LONG_MAX / 2)) throw CapExceeded("discount exponent too large to materialize");
      c.lambdas.push_back(pow2(-x.get_si()));
    }
  }
  return c;
}

LimitConstants limit_constants(const Game& g, const Assignment& chi, const Rational& eps) {
  validate_assignment(g, chi);
  return limit_constants(g.num_states(), g.max_actions(), chi.d, g.max_bit_size(), kappa_for(eps));
}

void check_exact_cap(const Game& g, const Assignment& chi, const SizeCap& cap) {
  if (g.num_states() > cap.n || g.max_actions() > cap.m || chi.d > cap.d) {
    throw CapExceeded("exact mode is limited to n <= " + std::to_string(cap.n) + ", m <= " + std::to_string(cap.m) +
                      ", d <= " + std::to_string(cap.d) + "; use ladder mode");
  }
}

DiscountedResult approx_limit(const Game& g, std::size_t state, const Assignment& chi, const Rational& eps) {
  LimitConstants c = limit_constants(g, chi, eps);
  Rational rounded = pow2(-static_cast<std::int64_t>(c.kappa));
  return approx_discounted(g, state, c.discount(chi), rounded / 2);
}

ParityReduction parity_to_limit(const Game& g, PriorityOrder order) {
  if (!g.priorities()) throw ValidationError("parity objective needs priorities");
  const auto& pr = *g.priorities();
  std::map<int, std::size_t> rank;
  for (int p : pr) {
    if (p < 0) throw ValidationError("priority out of range: " + std::to_string(p));
    rank.emplace(p, 0);
  }
  std::size_t k = 0;
  for (auto& [p, r] : rank) r = k++;
  const std::size_t d = rank.size();

  Assignment chi{d, {}};
  for (int p : pr) {
    std::size_t r = rank.at(p);
    chi.index.push_back(order == PriorityOrder::kOutermost ? r : d - 1 - r);
  }

  RationalVector rewards;
  rewards.reserve(g.num_states() * g.num_actions1() * g.num_actions2());
  for (std::size_t s = 0; s < g.num_states(); ++s) {
    Rational r = pr[s] % 2 == 0 ? 1 : 0;
    for (std::size_t i = 0; i < g.num_actions1() * g.num_actions2(); ++i) rewards.push_back(r);
  }
  return {g.with_rewards(std::move(rewards)), std::move(chi)};
}

DiscountedResult approx_parity(const Game& g, std::size_t state, const Rational& eps, PriorityOrder order) {
  ParityReduction red = parity_to_limit(g, order);
  return approx_limit(red.game, state, red.chi, eps);
}

std::vector<Rational> default_ladder() {
  std::vector<Rational> out;
  for (int k = 4; k <= 12; ++k) out.push_back(pow2(-k));
  return out;
}

void validate_ladder(const std::vector<Rational>& ladder) {
  if (ladder.size() < 2) throw ValidationError("ladder needs at least two values");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] <= 0 || ladder[i] > 1) throw ValidationError("ladder value outside (0,1]");
    if (i > 0 && ladder[i] >= ladder[i - 1]) throw ValidationError("ladder must be strictly decreasing");
  }
}

Rational extrapolate_to_zero(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2) {
  if (x1 == x2) throw Error("extrapolation needs distinct abscissae");
  return y2 - x2 * (y2 - y1) / (x2 - x1);
}

LadderResult ladder_limit(const Game& g, std::size_t state, const Assignment& chi,
                          const std::vector<Rational>& ladder, const Rational& eps) {
  validate_assignment(g, chi);
  validate_ladder(ladder);
  LadderResult out;
  out.ladder = ladder;
  for (const auto& lambda : ladder) {
    DiscountSpec disc;
    disc.assignment = chi.index;
    for (std::size_t i = 1; i <= chi.d; ++i) disc.factors.push_back(pow(lambda, i));
    out.rungs.push_back(approx_discounted(g, state, disc, eps / 4));
  }
  const std::size_t k = ladder.size();
  Rational est = extrapolate_to_zero(ladder[k - 2], out.rungs[k - 2].value, ladder[k - 1], out.rungs[k - 1].value);
  out.estimate = std::clamp(est, Rational(0), Rational(1));
  return out;
}

}  // namespace csg
