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

#include "csg/game.hpp"

#include <limits>
#include <sstream>

namespace csg {

namespace {

std::string coords(const GameSpec& g, const Triple& t) {
  std::ostringstream os;
  os << "(state " << g.states[t.state] << ", action1 " << g.actions1[t.a1] << ", action2 " << g.actions2[t.a2]
     << ")";
  return os.str();
}

void check_distribution(std::span<const Rational> row, std::size_t size, const std::string& what) {
  if (row.size() != size) throw ValidationError(what + ": expected " + std::to_string(size) + " entries");
  Rational sum = 0;
  for (const auto& p : row) {
    if (p < 0) throw ValidationError(what + ": negative probability " + to_string(p));
    sum += p;
  }
  if (sum != 1) throw ValidationError(what + ": row sum is " + to_string(sum) + ", expected 1");
}

}  // namespace

std::size_t Game::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == name) return i;
  }
  throw ValidationError("unknown state '" + std::string(name) + "'");
}

Game Game::with_rewards(RationalVector rewards) const {
  if (rewards.size() != rewards_.size()) throw ValidationError("reward table has the wrong size");
  for (const auto& r : rewards) {
    if (r < 0 || r > 1) throw ValidationError("reward range: " + to_string(r) + " outside [0,1]");
  }
  Game g = *this;
  g.rewards_ = std::move(rewards);
  g.has_rewards_ = true;
  return g;
}

std::uint64_t Game::max_bit_size() const {
  std::uint64_t b = 0;
  for (const auto& p : transition_) b = std::max(b, bit_size(p));
  if (has_rewards_) {
    for (const auto& r : rewards_) b = std::max(b, bit_size(r));
  }
  return b;
}

GameSpec Game::to_spec() const {
  GameSpec spec;
  spec.states = states_;
  spec.actions1 = actions1_;
  spec.actions2 = actions2_;
  for (std::size_t s = 0; s < num_states(); ++s) {
    for (std::size_t a = 0; a < num_actions1(); ++a) {
      for (std::size_t b = 0; b < num_actions2(); ++b) {
        auto r = row(s, a, b);
        spec.transitions[{s, a, b}] = RationalVector(r.begin(), r.end());
        if (has_rewards_) spec.rewards[{s, a, b}] = reward(s, a, b);
      }
    }
  }
  spec.priorities = priorities_;
  return spec;
}

Game validate_game(const GameSpec& raw) {
  const std::size_t n = raw.states.size();
  const std::size_t m1 = raw.actions1.size();
  const std::size_t m2 = raw.actions2.size();
  if (n == 0) throw ValidationError("empty state set");
  if (m1 == 0 || m2 == 0) throw ValidationError("empty action set");

  Game g;
  g.states_ = raw.states;
  g.actions1_ = raw.actions1;
  g.actions2_ = raw.actions2;
  g.transition_.reserve(n * m1 * m2 * n);
  g.rewards_.assign(n * m1 * m2, Rational(0));
  g.has_rewards_ = !raw.rewards.empty();

  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < m1; ++a) {
      for (std::size_t b = 0; b < m2; ++b) {
        Triple t{s, a, b};
        auto it = raw.transitions.find(t);
        if (it == raw.transitions.end()) throw ValidationError("missing triple " + coords(raw, t));
        check_distribution(it->second, n, "transition " + coords(raw, t));
        g.transition_.insert(g.transition_.end(), it->second.begin(), it->second.end());
        if (g.has_rewards_) {
          auto rit = raw.rewards.find(t);
          if (rit == raw.rewards.end()) throw ValidationError("missing reward for triple " + coords(raw, t));
          if (rit->second < 0 || rit->second > 1) {
            throw ValidationError("reward range: " + to_string(rit->second) + " outside [0,1] at " + coords(raw, t));
          }
          g.rewards_[g.offset(s, a, b)] = rit->second;
        }
      }
    }
  }
  if (raw.transitions.size() != n * m1 * m2) throw ValidationError("transition entry outside the declared shape");
  if (g.has_rewards_ && raw.rewards.size() != n * m1 * m2) {
    throw ValidationError("reward entry outside the declared shape");
  }
  if (raw.priorities) {
    if (raw.priorities->size() != n) throw ValidationError("priorities must cover every state");
    for (int p : *raw.priorities) {
      if (p < 0) throw ValidationError("priority must be non-negative");
    }
  }
  g.priorities_ = raw.priorities;
  return g;
}

Rational DiscountSpec::min_factor() const {
  Rational best = factors.at(assignment.at(0));
  for (std::size_t idx : assignment) best = std::min(best, factors[idx]);
  return best;
}

void validate_discount(const Game& g, const DiscountSpec& disc) {
  if (disc.factors.empty()) throw ValidationError("no discount factors");
  for (const auto& l : disc.factors) {
    if (l <= 0 || l > 1) throw ValidationError("discount factor " + to_string(l) + " outside (0,1]");
  }
  if (disc.assignment.size() != g.num_states()) throw ValidationError("discount assignment must cover every state");
  for (std::size_t idx : disc.assignment) {
    if (idx >= disc.factors.size()) throw ValidationError("discount assignment index out of range");
  }
}

DiscountSpec uniform_discount(const Game& g, const Rational& lambda) {
  return DiscountSpec{{lambda}, std::vector<std::size_t>(g.num_states(), 0)};
}

void validate_strategy(const Game& g, const MixedStationary& strat) {
  if (strat.rows.size() != g.num_states()) throw ValidationError("strategy shape mismatch: wrong number of states");
  const std::size_t m = g.num_actions(strat.player);
  for (std::size_t s = 0; s < strat.rows.size(); ++s) {
    if (strat.rows[s].size() != m) {
      throw ValidationError("strategy shape mismatch: state " + g.state_names()[s] + " expects " + std::to_string(m) +
                            " entries");
    }
    check_distribution(strat.rows[s], m, "strategy row for state " + g.state_names()[s]);
  }
}

void validate_strategy(const Game& g, const PureProfile& strat) {
  if (strat.choice.size() != g.num_states()) throw ValidationError("strategy shape mismatch: wrong number of states");
  for (std::size_t a : strat.choice) {
    if (a >= g.num_actions(strat.player)) throw ValidationError("strategy shape mismatch: action out of range");
  }
}

MixedStationary to_mixed(const Game& g, const PureProfile& p) {
  validate_strategy(g, p);
  MixedStationary out{p.player, {}};
  const std::size_t m = g.num_actions(p.player);
  for (std::size_t a : p.choice) {
    RationalVector row(m, Rational(0));
    row[a] = 1;
    out.rows.push_back(std::move(row));
  }
  return out;
}

MixedStationary uniform_strategy(const Game& g, Player p) {
  const std::size_t m = g.num_actions(p);
  return MixedStationary{p, std::vector<RationalVector>(g.num_states(), RationalVector(m, Rational(1, m)))};
}

InducedMDP induce_mdp(const Game& g, const MixedStationary& strat, const DiscountSpec& disc) {
  validate_strategy(g, strat);
  validate_discount(g, disc);
  const std::size_t n = g.num_states();
  const Player controller = opponent(strat.player);
  const std::size_t mc = g.num_actions(controller);
  const std::size_t mf = g.num_actions(strat.player);

  InducedMDP mdp;
  mdp.controller = controller;
  mdp.num_states = n;
  mdp.num_actions = mc;
  mdp.transition.assign(n, std::vector<RationalVector>(mc, RationalVector(n, Rational(0))));
  mdp.reward.assign(n, RationalVector(mc, Rational(0)));
  for (std::size_t s = 0; s < n; ++s) {
    mdp.discount.push_back(disc.at(s));
    for (std::size_t c = 0; c < mc; ++c) {
      for (std::size_t f = 0; f < mf; ++f) {
        const Rational& w = strat.rows[s][f];
        if (w == 0) continue;
        const std::size_t a = controller == Player::kOne ? c : f;
        const std::size_t b = controller == Player::kOne ? f : c;
        auto r = g.row(s, a, b);
        for (std::size_t t = 0; t < n; ++t) mdp.transition[s][c][t] += w * r[t];
        mdp.reward[s][c] += w * g.reward(s, a, b);
      }
    }
  }
  return mdp;
}

InducedMC fix_mdp(const InducedMDP& mdp, const MixedStationary& strat) {
  if (strat.player != mdp.controller || strat.rows.size() != mdp.num_states) {
    throw ValidationError("strategy shape mismatch: strategy does not control this MDP");
  }
  const std::size_t n = mdp.num_states;
  InducedMC mc;
  mc.transition.assign(n, RationalVector(n, Rational(0)));
  mc.reward.assign(n, Rational(0));
  mc.discount = mdp.discount;
  for (std::size_t s = 0; s < n; ++s) {
    if (strat.rows[s].size() != mdp.num_actions) throw ValidationError("strategy shape mismatch: action count");
    for (std::size_t c = 0; c < mdp.num_actions; ++c) {
      const Rational& w = strat.rows[s][c];
      if (w == 0) continue;
      for (std::size_t t = 0; t < n; ++t) mc.transition[s][t] += w * mdp.transition[s][c][t];
      mc.reward[s] += w * mdp.reward[s][c];
    }
  }
  return mc;
}

InducedMC induce_mc(const Game& g, const MixedStationary& sigma, const MixedStationary& tau,
                    const DiscountSpec& disc) {
  if (sigma.player != Player::kOne || tau.player != Player::kTwo) {
    throw ValidationError("strategy shape mismatch: expected (player 1, player 2) strategies");
  }
  validate_strategy(g, sigma);
  validate_strategy(g, tau);
  validate_discount(g, disc);
  const std::size_t n = g.num_states();
  InducedMC mc;
  mc.transition.assign(n, RationalVector(n, Rational(0)));
  mc.reward.assign(n, Rational(0));
  for (std::size_t s = 0; s < n; ++s) {
    mc.discount.push_back(disc.at(s));
    for (std::size_t a = 0; a < g.num_actions1(); ++a) {
      if (sigma.rows[s][a] == 0) continue;
      for (std::size_t b = 0; b < g.num_actions2(); ++b) {
        Rational w = sigma.rows[s][a] * tau.rows[s][b];
        if (w == 0) continue;
        auto r = g.row(s, a, b);
        for (std::size_t t = 0; t < n; ++t) mc.transition[s][t] += w * r[t];
        mc.reward[s] += w * g.reward(s, a, b);
      }
    }
  }
  return mc;
}

std::size_t count_pure(const Game& g, Player player, std::size_t cap) {
  const std::size_t m = g.num_actions(player);
  std::size_t count = 1;
  for (std::size_t s = 0; s < g.num_states(); ++s) {
    if (count > (cap + 1) / m) return cap + 1;
    count *= m;
  }
  return std::min(count, cap + 1);
}

std::vector<PureProfile> enumerate_pure(const Game& g, Player player) {
  const std::size_t n = g.num_states();
  const std::size_t m = g.num_actions(player);
  std::vector<PureProfile> out;
  PureProfile cur{player, std::vector<std::size_t>(n, 0)};
  while (true) {
    out.push_back(cur);
    // Odometer increment with the last state least significant.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++cur.choice[pos] < m) break;
      cur.choice[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace csg
