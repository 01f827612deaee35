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


#include <set>

#include "csg/game.hpp"
#include "csg/linalg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace csg;
using csg::testing::Rng;

TEST_SUITE("game-core") {
  TEST_CASE("bit sizes") {
    CHECK(bit_size(Integer(1)) == 1);
    CHECK(bit_size(Integer(7)) == 3);
    CHECK(bit_size(Integer(8)) == 4);
    CHECK(bit_size(Rational(3, 5)) == 5);
    CHECK(bit_size(Rational(0)) == 1);
    CHECK_THROWS_AS(bit_size(Integer(0)), Error);
    CHECK_THROWS_AS(bit_size(Integer(-3)), Error);
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("0.5"), ValidationError);
    CHECK(to_string(Rational(4, 8)) == "1/2");
    CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  }

  GameSpec one_state(const Rational& p, const Rational& r) {
    GameSpec spec;
    spec.states = {"s"};
    spec.actions1 = {"a"};
    spec.actions2 = {"b"};
    spec.transitions[{0, 0, 0}] = {p};
    spec.rewards[{0, 0, 0}] = r;
    return spec;
  }

  TEST_CASE("validation accepts and rejects") {
    Game g = validate_game(one_state(1, Rational(1, 2)));
    CHECK(g.num_states() == 1);
    CHECK(g.reward(0, 0, 0) == Rational(1, 2));

    try {
      validate_game(one_state(Rational(3, 4), Rational(1, 2)));
      FAIL("expected a row-sum error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("row sum") != std::string::npos);
    }
    try {
      validate_game(one_state(1, Rational(3, 2)));
      FAIL("expected a reward-range error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("reward range") != std::string::npos);
    }
    GameSpec missing = one_state(1, 0);
    missing.actions2.push_back("c");
    try {
      validate_game(missing);
      FAIL("expected a missing-triple error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("missing triple") != std::string::npos);
    }
    GameSpec empty;
    CHECK_THROWS_WITH_AS(validate_game(empty), doctest::Contains("empty state set"), ValidationError);
    GameSpec no_actions = one_state(1, 0);
    no_actions.actions1.clear();
    CHECK_THROWS_WITH_AS(validate_game(no_actions), doctest::Contains("empty action set"), ValidationError);
  }

  TEST_CASE("mdp induction averages rows") {
    Rng rng(11);
    Game g = testing::random_game(rng, 2, 2, 2);
    DiscountSpec disc = uniform_discount(g, Rational(1, 3));

    // Dirac on action 0 reproduces the selected rows.
    MixedStationary dirac{Player::kOne, {{1, 0}, {1, 0}}};
    InducedMDP mdp = induce_mdp(g, dirac, disc);
    CHECK(mdp.controller == Player::kTwo);
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t b = 0; b < 2; ++b) {
        auto row = g.row(s, 0, b);
        CHECK(mdp.transition[s][b] == RationalVector(row.begin(), row.end()));
      }
    }

    // Random mixed strategy against a direct weighted sum.
    MixedStationary sigma = testing::random_strategy(rng, g, Player::kOne);
    mdp = induce_mdp(g, sigma, disc);
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t b = 0; b < 2; ++b) {
        Rational rw = 0;
        for (std::size_t t = 0; t < 2; ++t) {
          Rational pt = 0;
          for (std::size_t a = 0; a < 2; ++a) pt += sigma.rows[s][a] * g.prob(s, a, b, t);
          CHECK(mdp.transition[s][b][t] == pt);
        }
        for (std::size_t a = 0; a < 2; ++a) rw += sigma.rows[s][a] * g.reward(s, a, b);
        CHECK(mdp.reward[s][b] == rw);
      }
    }
  }

  TEST_CASE("two-term average") {
    GameSpec spec;
    spec.states = {"s", "t"};
    spec.actions1 = {"x", "y"};
    spec.actions2 = {"b"};
    spec.transitions[{0, 0, 0}] = {0, 1};
    spec.transitions[{0, 1, 0}] = {1, 0};
    spec.transitions[{1, 0, 0}] = {0, 1};
    spec.transitions[{1, 1, 0}] = {0, 1};
    for (auto& [k, v] : spec.transitions) spec.rewards[k] = 0;
    Game g = validate_game(spec);
    InducedMDP mdp = induce_mdp(g, uniform_strategy(g, Player::kOne), uniform_discount(g, 1));
    CHECK(mdp.transition[0][0][1] == Rational(1, 2));
  }

  TEST_CASE("markov chain induction") {
    Rng rng(12);
    Game g = testing::random_game(rng, 3, 2, 2);
    DiscountSpec disc = uniform_discount(g, Rational(1, 2));
    MixedStationary sigma = testing::random_strategy(rng, g, Player::kOne);
    MixedStationary tau = testing::random_strategy(rng, g, Player::kTwo);
    InducedMC mc = induce_mc(g, sigma, tau, disc);
    for (std::size_t s = 0; s < 3; ++s) {
      Rational sum = 0;
      for (std::size_t t = 0; t < 3; ++t) {
        Rational p = 0;
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t b = 0; b < 2; ++b) p += g.prob(s, a, b, t) * sigma.rows[s][a] * tau.rows[s][b];
        }
        CHECK(mc.transition[s][t] == p);
        sum += mc.transition[s][t];
      }
      CHECK(sum == 1);
    }
    // Composition through the player-2 MDP.
    InducedMC via = fix_mdp(induce_mdp(g, sigma, disc), tau);
    CHECK(via.transition == mc.transition);
    CHECK(via.reward == mc.reward);

    // Matching pennies stage reward under uniform play.
    GameSpec mp;
    mp.states = {"s"};
    mp.actions1 = {"H", "T"};
    mp.actions2 = {"H", "T"};
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        mp.transitions[{0, a, b}] = {1};
        mp.rewards[{0, a, b}] = a == b ? 1 : 0;
      }
    }
    Game mpg = validate_game(mp);
    InducedMC u = induce_mc(mpg, uniform_strategy(mpg, Player::kOne), uniform_strategy(mpg, Player::kTwo),
                            uniform_discount(mpg, Rational(1, 2)));
    CHECK(u.reward[0] == Rational(1, 2));
  }

  TEST_CASE("strategy shape mismatch") {
    Rng rng(13);
    Game g = testing::random_game(rng, 2, 2, 3);
    MixedStationary bad{Player::kTwo, {{1, 0}, {1, 0}}};
    CHECK_THROWS_WITH_AS(induce_mdp(g, bad, uniform_discount(g, 1)), doctest::Contains("strategy shape mismatch"),
                         ValidationError);
  }

  TEST_CASE("pure strategy enumeration") {
    Rng rng(14);
    CHECK(enumerate_pure(testing::random_game(rng, 1, 2, 2), Player::kOne).size() == 2);
    auto two = enumerate_pure(testing::random_game(rng, 2, 2, 2), Player::kOne);
    REQUIRE(two.size() == 4);
    CHECK(two[0].choice == std::vector<std::size_t>{0, 0});
    CHECK(two[1].choice == std::vector<std::size_t>{0, 1});
    CHECK(two[2].choice == std::vector<std::size_t>{1, 0});
    CHECK(two[3].choice == std::vector<std::size_t>{1, 1});
    auto three = enumerate_pure(testing::random_game(rng, 3, 3, 1), Player::kOne);
    CHECK(three.size() == 27);
    CHECK(std::set<PureProfile>(three.begin(), three.end()).size() == 27);
    CHECK(std::is_sorted(three.begin(), three.end()));
    CHECK(count_pure(testing::random_game(rng, 3, 3, 1), Player::kOne, 10) == 11);
  }
}

TEST_SUITE("exact-linalg") {
  TEST_CASE("determinants") {
    CHECK(bareiss_det(RatMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(bareiss_det(RatMatrix::identity(3)) == 1);
    CHECK(bareiss_det(RatMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_det(RatMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(bareiss_det(RatMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}}) ==
          Rational(1, 10) - Rational(1, 12));
    CHECK_THROWS_AS(bareiss_det(RatMatrix(2, 3)), Error);

    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t k = testing::uniform(rng, 1, 6);
      RatMatrix m = testing::random_matrix(rng, k, k);
      CHECK(bareiss_det(m) == testing::laplace_det(m));
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t k = testing::uniform(rng, 1, 5);
      RatMatrix a = testing::random_matrix(rng, k, k);
      RatMatrix b = testing::random_matrix(rng, k, k);
      CHECK(bareiss_det(a * b) == bareiss_det(a) * bareiss_det(b));
    }
  }

  TEST_CASE("signed minor sums") {
    CHECK(signed_minor_sum(RatMatrix{{7}}) == 1);
    Rational a(2), b(3), c(5), d(11);
    CHECK(signed_minor_sum(RatMatrix{{a, b}, {c, d}}) == a + d - b - c);
    Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
      RatMatrix m = testing::random_matrix(rng, 4, 4);
      // Independent: explicit (-1)^(i+j) minors.
      Rational s = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          Rational minor = testing::laplace_det(m.minor(i, j));
          s += (i + j) % 2 == 0 ? minor : Rational(-minor);
        }
      }
      CHECK(signed_minor_sum(m) == s);
      // adj(M) M = det(M) I.
      RatMatrix prod = adjugate(m) * m;
      Rational det = bareiss_det(m);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) CHECK(prod(i, j) == (i == j ? det : Rational(0)));
      }
    }
  }

  TEST_CASE("linear solves") {
    RationalVector b{3, Rational(-1, 2), 7};
    CHECK(solve_linear(RatMatrix::identity(3), b) == b);
    CHECK(solve_linear(RatMatrix{{2, 0}, {0, 4}}, RationalVector{1, 1}) == RationalVector{Rational(1, 2), Rational(1, 4)});
    CHECK(solve_linear(RatMatrix{{0, 1}, {1, 0}}, RationalVector{2, 3}) == RationalVector{3, 2});
    CHECK_THROWS_WITH_AS(solve_linear(RatMatrix{{1, 2}, {2, 4}}, RationalVector{1, 1}), "singular matrix", Error);
    Rng rng(23);
    int solved = 0;
    while (solved < 20) {
      RatMatrix m = testing::random_matrix(rng, 5, 5);
      if (bareiss_det(m) == 0) continue;
      RationalVector rhs;
      for (int i = 0; i < 5; ++i) rhs.push_back(testing::random_signed(rng));
      RationalVector x = solve_linear(m, rhs);
      CHECK(m * std::span<const Rational>(x) == rhs);
      ++solved;
    }
  }
}
