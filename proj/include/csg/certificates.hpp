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


#ifndef CSG_CERTIFICATES_HPP
#define CSG_CERTIFICATES_HPP

#include <cstddef>
#include <cstdint>

#include "csg/game.hpp"

namespace csg {

/// Pure-strategy enumeration cap, read from CSG_ENUM_CAP (default 65536).
std::size_t enumeration_cap();

/// Exact optimal values of the controller in every state, by enumerating
/// pure stationary strategies. Player 1 maximizes, player 2 minimizes.
/// The result is checked to be a fixed point of the Bellman operator.
RationalVector best_response_values(const InducedMDP& mdp);
Rational best_response_value(const InducedMDP& mdp, std::size_t state);

/// Fixes `strat`, lets the opponent best-respond, and compares with
/// per-state reference values: b >= ref - eps for player 1, b <= ref + eps
/// for player 2, in every state.
bool check_eps_optimal(const Game& g, const DiscountSpec& disc, const MixedStationary& strat, const Rational& eps,
                       const RationalVector& value_ref);

struct ValueCertificate {
  std::size_t state = 0;
  MixedStationary sigma;
  MixedStationary tau;
  Integer j;
  std::uint64_t kappa = 0;

  Rational alpha() const;
};

struct CertificateCheck {
  bool accepted = false;
  Rational alpha;
  Rational v_sigma;  // player 2's best response against sigma
  Rational v_tau;    // player 1's best response against tau
  Rational lower_lhs;  // alpha - 3 eps / 4
  Rational lower_rhs;  // v_sigma - eps / 4
  Rational upper_lhs;  // alpha + 3 eps / 4
  Rational upper_rhs;  // v_tau + eps / 4
};

void validate_certificate(const Game& g, const ValueCertificate& cert);

/// Accepts iff alpha - 3eps/4 <= v_sigma - eps/4 and
/// alpha + 3eps/4 >= v_tau + eps/4. Requires eps = 2^-kappa.
CertificateCheck verify_certificate(const Game& g, const DiscountSpec& disc, const ValueCertificate& cert,
                                    const Rational& eps);

/// max over (s, a) of the L1 distance between transition rows, divided by
/// the smallest discount factor.
Rational mdp_continuity_gap(const InducedMDP& a, const InducedMDP& b);

/// Zeroes every probability <= threshold and rescales each row to sum 1.
MixedStationary prune_strategy(const MixedStationary& strat, const Rational& threshold);

}  // namespace csg

#endif  // CSG_CERTIFICATES_HPP
