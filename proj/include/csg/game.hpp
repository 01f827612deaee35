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

#ifndef CSG_GAME_HPP
#define CSG_GAME_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csg/rational.hpp"

namespace csg {

enum class Player { kOne = 1, kTwo = 2 };

inline Player opponent(Player p) { return p == Player::kOne ? Player::kTwo : Player::kOne; }

/// (state, player-1 action, player-2 action), all zero-based.
struct Triple {
  std::size_t state = 0;
  std::size_t a1 = 0;
  std::size_t a2 = 0;
  auto operator<=>(const Triple&) const = default;
};

/// Unvalidated game description, the shape a parser produces. Transition
/// vectors are indexed by successor state. An empty reward map means the
/// game carries no rewards (a parity instance).
struct GameSpec {
  std::vector<std::string> states;
  std::vector<std::string> actions1;
  std::vector<std::string> actions2;
  std::map<Triple, RationalVector> transitions;
  std::map<Triple, Rational> rewards;
  std::optional<std::vector<int>> priorities;
};

/// A validated concurrent stochastic game with dense exact storage.
/// Immutable after construction.
class Game {
 public:
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_actions1() const { return actions1_.size(); }
  std::size_t num_actions2() const { return actions2_.size(); }
  std::size_t num_actions(Player p) const { return p == Player::kOne ? num_actions1() : num_actions2(); }
  /// m = max(|A1|, |A2|).
  std::size_t max_actions() const { return std::max(num_actions1(), num_actions2()); }

  const std::vector<std::string>& state_names() const { return states_; }
  const std::vector<std::string>& action1_names() const { return actions1_; }
  const std::vector<std::string>& action2_names() const { return actions2_; }
  std::size_t state_index(std::string_view name) const;

  std::span<const Rational> row(std::size_t s, std::size_t a, std::size_t b) const {
    return {transition_.data() + offset(s, a, b) * num_states(), num_states()};
  }
  const Rational& prob(std::size_t s, std::size_t a, std::size_t b, std::size_t t) const {
    return transition_[offset(s, a, b) * num_states() + t];
  }
  const Rational& reward(std::size_t s, std::size_t a, std::size_t b) const { return rewards_[offset(s, a, b)]; }

  bool has_rewards() const { return has_rewards_; }
  const std::optional<std::vector<int>>& priorities() const { return priorities_; }

  /// Copy of this game with a replaced reward table (indexed like offset()).
  Game with_rewards(RationalVector rewards) const;

  /// Max bit size over every transition and reward rational.
  std::uint64_t max_bit_size() const;

  GameSpec to_spec() const;

 private:
  friend Game validate_game(const GameSpec& raw);

  std::size_t offset(std::size_t s, std::size_t a, std::size_t b) const {
    return (s * num_actions1() + a) * num_actions2() + b;
  }

  std::vector<std::string> states_;
  std::vector<std::string> actions1_;
  std::vector<std::string> actions2_;
  RationalVector transition_;
  RationalVector rewards_;
  bool has_rewards_ = false;
  std::optional<std::vector<int>> priorities_;
};

/// Returns the validated game or throws ValidationError naming the first
/// violated invariant ("row sum", "reward range", "missing triple", ...).
Game validate_game(const GameSpec& raw);

/// Per-state discount factors lambda_{chi(s)}. Assignment is zero-based.
struct DiscountSpec {
  RationalVector factors;
  std::vector<std::size_t> assignment;

  const Rational& at(std::size_t s) const { return factors[assignment[s]]; }
  Rational min_factor() const;
};

void validate_discount(const Game& g, const DiscountSpec& disc);

/// Uniform discount lambda on every state.
DiscountSpec uniform_discount(const Game& g, const Rational& lambda);

struct MixedStationary {
  Player player = Player::kOne;
  std::vector<RationalVector> rows;  // rows[s][action]
};

struct PureProfile {
  Player player = Player::kOne;
  std::vector<std::size_t> choice;  // choice[s] = action index

  auto operator<=>(const PureProfile&) const = default;
};

void validate_strategy(const Game& g, const MixedStationary& strat);
void validate_strategy(const Game& g, const PureProfile& strat);

MixedStationary to_mixed(const Game& g, const PureProfile& p);
MixedStationary uniform_strategy(const Game& g, Player p);

/// Markov chain obtained by fixing both players' stationary strategies.
struct InducedMC {
  std::vector<RationalVector> transition;  // transition[s][t]
  RationalVector reward;
  RationalVector discount;

  std::size_t num_states() const { return transition.size(); }
};

/// Single-controller MDP obtained by fixing one player's stationary strategy.
struct InducedMDP {
  Player controller = Player::kOne;
  std::size_t num_states = 0;
  std::size_t num_actions = 0;
  std::vector<std::vector<RationalVector>> transition;  // [s][a][t]
  std::vector<RationalVector> reward;                   // [s][a]
  RationalVector discount;
};

/// Fixes `strat` and returns the opponent's MDP.
InducedMDP induce_mdp(const Game& g, const MixedStationary& strat, const DiscountSpec& disc);

InducedMC induce_mc(const Game& g, const MixedStationary& sigma, const MixedStationary& tau,
                    const DiscountSpec& disc);

/// Fixes the controller's choice in an MDP.
InducedMC fix_mdp(const InducedMDP& mdp, const MixedStationary& strat);

/// All pure stationary strategies of `player`, lexicographic in
/// (state, action) with state 0 most significant.
std::vector<PureProfile> enumerate_pure(const Game& g, Player player);

/// Number of pure stationary strategies of `player`, saturating at `cap + 1`.
std::size_t count_pure(const Game& g, Player player, std::size_t cap);

}  // namespace csg

#endif  // CSG_GAME_HPP
