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


#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "csg/kernel.hpp"

namespace csg::testing {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

Rational random_unit(Rng& rng, std::uint64_t max_den) {
  std::uint64_t q = uniform(rng, 1, max_den);
  std::uint64_t k = uniform(rng, 0, q);
  Rational r(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(q)));
  r.canonicalize();
  return r;
}

Rational random_signed(Rng& rng, std::int64_t max_num, std::uint64_t max_den) {
  auto k = static_cast<long>(uniform(rng, 0, static_cast<std::uint64_t>(2 * max_num))) - max_num;
  std::uint64_t q = uniform(rng, 1, max_den);
  Rational r(Integer(k), Integer(static_cast<unsigned long>(q)));
  r.canonicalize();
  return r;
}

RationalVector random_distribution(Rng& rng, std::size_t k, std::uint64_t max_den) {
  std::uint64_t q = uniform(rng, 1, max_den);
  // Stars and bars: k - 1 cut points in [0, q].
  std::vector<std::uint64_t> cuts{0, q};
  for (std::size_t i = 0; i + 1 < k; ++i) cuts.push_back(uniform(rng, 0, q));
  std::sort(cuts.begin(), cuts.end());
  RationalVector out;
  for (std::size_t i = 0; i < k; ++i) {
    Rational r(Integer(static_cast<unsigned long>(cuts[i + 1] - cuts[i])), Integer(static_cast<unsigned long>(q)));
    r.canonicalize();
    out.push_back(r);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

RationalVector random_dyadic_distribution(Rng& rng, std::size_t k, unsigned bits) {
  std::uint64_t q = std::uint64_t{1} << bits;
  std::vector<std::uint64_t> cuts{0, q};
  for (std::size_t i = 0; i + 1 < k; ++i) cuts.push_back(uniform(rng, 0, q));
  std::sort(cuts.begin(), cuts.end());
  RationalVector out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(Rational(Integer(static_cast<unsigned long>(cuts[i + 1] - cuts[i]))) * pow2(-static_cast<int>(bits)));
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

Game random_game(Rng& rng, std::size_t n, std::size_t m1, std::size_t m2, std::uint64_t max_den) {
  GameSpec spec;
  for (std::size_t s = 0; s < n; ++s) spec.states.push_back("s" + std::to_string(s));
  for (std::size_t a = 0; a < m1; ++a) spec.actions1.push_back("a" + std::to_string(a));
  for (std::size_t b = 0; b < m2; ++b) spec.actions2.push_back("b" + std::to_string(b));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < m1; ++a) {
      for (std::size_t b = 0; b < m2; ++b) {
        spec.transitions[{s, a, b}] = random_distribution(rng, n, max_den);
        spec.rewards[{s, a, b}] = random_unit(rng, max_den);
      }
    }
  }
  return validate_game(spec);
}

DiscountSpec random_discount(Rng& rng, const Game& g, std::size_t d, const Rational& min_lambda) {
  DiscountSpec disc;
  for (std::size_t i = 0; i < d; ++i) {
    Rational l;
    do {
      l = random_unit(rng, 15);
    } while (l < min_lambda || l == 0);
    disc.factors.push_back(l);
  }
  for (std::size_t s = 0; s < g.num_states(); ++s) disc.assignment.push_back(uniform(rng, 0, d - 1));
  return disc;
}

MixedStationary random_strategy(Rng& rng, const Game& g, Player p, std::uint64_t max_den) {
  MixedStationary st;
  st.player = p;
  for (std::size_t s = 0; s < g.num_states(); ++s) st.rows.push_back(random_distribution(rng, g.num_actions(p), max_den));
  return st;
}

RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_signed(rng);
  }
  return m;
}

InducedMC random_dyadic_mc(Rng& rng, std::size_t n, unsigned bits) {
  InducedMC mc;
  for (std::size_t s = 0; s < n; ++s) {
    mc.transition.push_back(random_dyadic_distribution(rng, n, bits));
    mc.reward.push_back(Rational(Integer(static_cast<unsigned long>(uniform(rng, 0, std::uint64_t{1} << bits)))) *
                        pow2(-static_cast<int>(bits)));
    mc.discount.push_back(Rational(Integer(static_cast<unsigned long>(uniform(rng, 1, std::uint64_t{1} << bits)))) *
                          pow2(-static_cast<int>(bits)));
  }
  return mc;
}

InducedMC random_mc(Rng& rng, std::size_t n) {
  InducedMC mc;
  for (std::size_t s = 0; s < n; ++s) {
    mc.transition.push_back(random_distribution(rng, n));
    mc.reward.push_back(random_unit(rng));
    Rational l;
    do {
      l = random_unit(rng);
    } while (l == 0);
    mc.discount.push_back(l);
  }
  return mc;
}

ReachMC random_absorbing(Rng& rng, std::size_t transient) {
  ReachMC r;
  const std::size_t k = transient + 2;
  r.top = transient;
  r.bot = transient + 1;
  for (std::size_t s = 0; s < transient; ++s) {
    RationalVector row;
    do {
      row = random_distribution(rng, k, 15);
    } while (row[r.top] + row[r.bot] == 0);
    r.transition.push_back(row);
  }
  for (std::size_t s : {r.top, r.bot}) {
    RationalVector row(k, Rational(0));
    row[s] = 1;
    r.transition.push_back(row);
  }
  return r;
}

Rational laplace_det(const RatMatrix& m) {
  const std::size_t k = m.rows();
  if (k == 1) return m(0, 0);
  Rational sum = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (m(0, j) == 0) continue;
    Rational term = m(0, j) * laplace_det(m.minor(0, j));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

RationalVector parity_probability(const Game& g, const PureProfile& sigma, const PureProfile& tau) {
  const std::size_t n = g.num_states();
  const auto& pr = *g.priorities();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<RationalVector> p(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto row = g.row(s, sigma.choice[s], tau.choice[s]);
    p[s].assign(row.begin(), row.end());
    for (std::size_t t = 0; t < n; ++t) {
      if (row[t] > 0) succ[s].push_back(t);
    }
  }
  // reach[s][t]: t reachable from s (reflexive).
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t t : succ[u]) {
        if (!reach[s][t]) {
          reach[s][t] = true;
          stack.push_back(t);
        }
      }
    }
  }
  // A state is recurrent iff everything it reaches reaches it back; its
  // class wins iff the class's minimum priority is even.
  std::vector<int> status(n, -1);  // -1 transient, 0 losing, 1 winning
  for (std::size_t s = 0; s < n; ++s) {
    bool recurrent = true;
    int lowest = pr[s];
    for (std::size_t t = 0; t < n; ++t) {
      if (!reach[s][t]) continue;
      if (!reach[t][s]) recurrent = false;
      lowest = std::min(lowest, pr[t]);
    }
    if (recurrent) status[s] = lowest % 2 == 0 ? 1 : 0;
  }
  std::vector<std::size_t> transient;
  for (std::size_t s = 0; s < n; ++s) {
    if (status[s] < 0) transient.push_back(s);
  }
  RationalVector out(n, Rational(0));
  for (std::size_t s = 0; s < n; ++s) {
    if (status[s] == 1) out[s] = 1;
  }
  if (transient.empty()) return out;
  const std::size_t t = transient.size();
  RatMatrix m(t, t);
  RationalVector b(t, Rational(0));
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t s = transient[i];
    for (std::size_t j = 0; j < t; ++j) m(i, j) = (i == j ? Rational(1) : Rational(0)) - p[s][transient[j]];
    for (std::size_t u = 0; u < n; ++u) {
      if (status[u] == 1) b[i] += p[s][u];
    }
  }
  RationalVector x = solve_linear(m, b);
  for (std::size_t i = 0; i < t; ++i) out[transient[i]] = x[i];
  return out;
}

RationalVector parity_value_pure(const Game& g) {
  const std::size_t n = g.num_states();
  RationalVector best(n, Rational(-1));
  for (const auto& sigma : enumerate_pure(g, Player::kOne)) {
    RationalVector worst(n, Rational(2));
    for (const auto& tau : enumerate_pure(g, Player::kTwo)) {
      RationalVector v = parity_probability(g, sigma, tau);
      for (std::size_t s = 0; s < n; ++s) worst[s] = std::min(worst[s], v[s]);
    }
    for (std::size_t s = 0; s < n; ++s) best[s] = std::max(best[s], worst[s]);
  }
  return best;
}

MultiPoly random_poly(Rng& rng, std::size_t vars, std::uint32_t max_degree, unsigned coeff_bits) {
  std::vector<std::uint32_t> degrees(vars);
  for (auto& d : degrees) d = static_cast<std::uint32_t>(uniform(rng, 1, max_degree));
  MultiPoly p(degrees);
  const std::size_t terms = uniform(rng, 1, 6);
  const std::uint64_t cmax = (std::uint64_t{1} << coeff_bits) - 1;
  while (p.is_zero()) {
    for (std::size_t k = 0; k < terms; ++k) {
      MultiPoly::Exponents e(vars);
      for (std::size_t i = 0; i < vars; ++i) e[i] = static_cast<std::uint32_t>(uniform(rng, 0, degrees[i]));
      auto c = static_cast<long>(uniform(rng, 1, cmax));
      if (uniform(rng, 0, 1) == 1) c = -c;
      p.add_term(e, Integer(c));
    }
  }
  return p;
}

GameSpec spec_from_rows(const std::vector<std::string>& states, std::size_t m1, std::size_t m2,
                        const std::vector<std::vector<std::vector<RationalVector>>>& rows,
                        const std::vector<std::vector<std::vector<Rational>>>& rewards) {
  GameSpec spec;
  spec.states = states;
  for (std::size_t a = 0; a < m1; ++a) spec.actions1.push_back("a" + std::to_string(a));
  for (std::size_t b = 0; b < m2; ++b) spec.actions2.push_back("b" + std::to_string(b));
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t a = 0; a < m1; ++a) {
      for (std::size_t b = 0; b < m2; ++b) {
        spec.transitions[{s, a, b}] = rows[s][a][b];
        if (!rewards.empty()) spec.rewards[{s, a, b}] = rewards[s][a][b];
      }
    }
  }
  return spec;
}

std::string fixture(const std::string& name) { return std::string(CSG_FIXTURE_DIR) + "/" + name; }

}  // namespace csg::testing
