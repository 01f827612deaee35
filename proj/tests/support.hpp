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


#ifndef CSG_TESTS_SUPPORT_HPP
#define CSG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "csg/game.hpp"
#include "csg/linalg.hpp"
#include "csg/mc_pipeline.hpp"
#include "csg/poly.hpp"

namespace csg::testing {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

/// k / q with q in [1, max_den], k in [0, q]; bit size <= 2 bit(max_den).
Rational random_unit(Rng& rng, std::uint64_t max_den = 15);
/// Signed rational with numerator in [-max_num, max_num].
Rational random_signed(Rng& rng, std::int64_t max_num = 9, std::uint64_t max_den = 9);
/// Distribution over `k` outcomes with common denominator <= max_den.
RationalVector random_distribution(Rng& rng, std::size_t k, std::uint64_t max_den = 15);
/// Dyadic distribution with denominator 2^bits.
RationalVector random_dyadic_distribution(Rng& rng, std::size_t k, unsigned bits);

Game random_game(Rng& rng, std::size_t n, std::size_t m1, std::size_t m2, std::uint64_t max_den = 15);
DiscountSpec random_discount(Rng& rng, const Game& g, std::size_t d, const Rational& min_lambda);
MixedStationary random_strategy(Rng& rng, const Game& g, Player p, std::uint64_t max_den = 15);
RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c);

/// Chain with dyadic data of `bits` bits.
InducedMC random_dyadic_mc(Rng& rng, std::size_t n, unsigned bits);
InducedMC random_mc(Rng& rng, std::size_t n);
/// Absorbing chain with top/bot; every transient state has positive mass
/// to an absorbing state.
ReachMC random_absorbing(Rng& rng, std::size_t transient);

/// Laplace expansion along the first row.
Rational laplace_det(const RatMatrix& m);

/// Probability of the parity objective under fixed pure strategies, by
/// bottom strongly connected components and exact reachability.
RationalVector parity_probability(const Game& g, const PureProfile& sigma, const PureProfile& tau);
/// max over sigma of min over tau of the above, per state.
RationalVector parity_value_pure(const Game& g);

MultiPoly random_poly(Rng& rng, std::size_t vars, std::uint32_t max_degree, unsigned coeff_bits);

GameSpec spec_from_rows(const std::vector<std::string>& states, std::size_t m1, std::size_t m2,
                        const std::vector<std::vector<std::vector<RationalVector>>>& rows,
                        const std::vector<std::vector<std::vector<Rational>>>& rewards);

std::string fixture(const std::string& name);

}  // namespace csg::testing

#endif  // CSG_TESTS_SUPPORT_HPP
