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


#include "csg/certificates.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "csg/kernel.hpp"

namespace csg {

std::size_t enumeration_cap() {
  const char* env = std::getenv("CSG_ENUM_CAP");
  if (env == nullptr || *env == '\0') return 65536;
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw ValidationError(std::string("CSG_ENUM_CAP is not a number: ") + env);
  }
}

namespace {

// Odometer over pure strategies of an MDP, state 0 most significant.
bool next_choice(std::vector<std::size_t>& choice, std::size_t m) {
  for (std::size_t pos = choice.size(); pos-- > 0;) {
    if (++choice[pos] < m) return true;
    choice[pos] = 0;
  }
  return false;
}

MixedStationary dirac(const InducedMDP& mdp, const std::vector<std::size_t>& choice) {
  MixedStationary s;
  s.player = mdp.controller;
  for (std::size_t i = 0; i < mdp.num_states; ++i) {
    RationalVector row(mdp.num_actions, Rational(0));
    row[choice[i]] = 1;
    s.rows.push_back(std::move(row));
  }
  return s;
}

Rational q_value(const InducedMDP& mdp, std::size_t s, std::size_t a, const RationalVector& v) {
  Rational cont = 0;
  for (std::size_t t = 0; t < mdp.num_states; ++t) cont += mdp.transition[s][a][t] * v[t];
  return mdp.discount[s] * mdp.reward[s][a] + (1 - mdp.discount[s]) * cont;
}

}  // namespace

RationalVector best_response_values(const InducedMDP& mdp) {
  const bool maximize = mdp.controller == Player::kOne;
  const std::size_t cap = enumeration_cap();
  std::size_t count = 1;
  for (std::size_t s = 0; s < mdp.num_states; ++s) {
    if (count > cap / std::max<std::size_t>(mdp.num_actions, 1)) {
      throw CapExceeded("pure strategy count exceeds the enumeration cap of " + std::to_string(cap));
    }
    count *= mdp.num_actions;
  }
  if (count > cap) throw CapExceeded("pure strategy count exceeds the enumeration cap of " + std::to_string(cap));

  std::vector<std::size_t> choice(mdp.num_states, 0);
  RationalVector best;
  do {
    RationalVector v = discounted_values(fix_mdp(mdp, dirac(mdp, choice)));
    if (best.empty()) {
      best = v;
      continue;
    }
    for (std::size_t s = 0; s < v.size(); ++s) best[s] = maximize ? std::max(best[s], v[s]) : std::min(best[s], v[s]);
  } while (next_choice(choice, mdp.num_actions));

  for (std::size_t s = 0; s < mdp.num_states; ++s) {
    Rational opt = q_value(mdp, s, 0, best);
    for (std::size_t a = 1; a < mdp.num_actions; ++a) {
      Rational q = q_value(mdp, s, a, best);
      opt = maximize ? std::max(opt, q) : std::min(opt, q);
    }
    if (opt != best[s]) throw Error("best response fails its Bellman residual check");
  }
  return best;
}

Rational best_response_value(const InducedMDP& mdp, std::size_t state) {
  if (state >= mdp.num_states) throw Error("state index out of range");
  return best_response_values(mdp)[state];
}

bool check_eps_optimal(const Game& g, const DiscountSpec& disc, const MixedStationary& strat, const Rational& eps,
                       const RationalVector& value_ref) {
  if (value_ref.size() != g.num_states()) throw Error("reference values must cover every state");
  RationalVector b = best_response_values(induce_mdp(g, strat, disc));
  for (std::size_t s = 0; s < b.size(); ++s) {
    bool ok = strat.player == Player::kOne ? b[s] >= value_ref[s] - eps : b[s] <= value_ref[s] + eps;
    if (!ok) return false;
  }
  return true;
}

Rational ValueCertificate::alpha() const {
  return Rational(j) * pow2(-static_cast<std::int64_t>(kappa) - 2);
}

void validate_certificate(const Game& g, const ValueCertificate& cert) {
  if (cert.state >= g.num_states()) throw ValidationError("certificate state out of range");
  if (cert.sigma.player != Player::kOne || cert.tau.player != Player::kTwo) {
    throw ValidationError("certificate needs a player-1 sigma and a player-2 tau");
  }
  validate_strategy(g, cert.sigma);
  validate_strategy(g, cert.tau);
  Integer top = 1;
  mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), cert.kappa + 2);
  if (cert.j < 0 || cert.j > top) throw ValidationError("certificate j outside [0, 2^(kappa+2)]");
}

CertificateCheck verify_certificate(const Game& g, const DiscountSpec& disc, const ValueCertificate& cert,
                                    const Rational& eps) {
  validate_certificate(g, cert);
  if (eps != pow2(-static_cast<std::int64_t>(cert.kappa))) {
    throw ValidationError("epsilon does not match the certificate's kappa");
  }
  CertificateCheck c;
  c.alpha = cert.alpha();
  c.v_sigma = best_response_value(induce_mdp(g, cert.sigma, disc), cert.state);
  c.v_tau = best_response_value(induce_mdp(g, cert.tau, disc), cert.state);
  c.lower_lhs = c.alpha - 3 * eps / 4;
  c.lower_rhs = c.v_sigma - eps / 4;
  c.upper_lhs = c.alpha + 3 * eps / 4;
  c.upper_rhs = c.v_tau + eps / 4;
  c.accepted = c.lower_lhs <= c.lower_rhs && c.upper_lhs >= c.upper_rhs;
  return c;
}

Rational mdp_continuity_gap(const InducedMDP& a, const InducedMDP& b) {
  if (a.num_states != b.num_states || a.num_actions != b.num_actions || a.controller != b.controller) {
    throw Error("MDP shape mismatch");
  }
  if (a.discount != b.discount) throw Error("MDP discount mismatch");
  if (a.reward != b.reward) throw Error("MDP reward mismatch");
  Rational worst = 0;
  for (std::size_t s = 0; s < a.num_states; ++s) {
    for (std::size_t act = 0; act < a.num_actions; ++act) {
      Rational l1 = 0;
      for (std::size_t t = 0; t < a.num_states; ++t) l1 += abs(a.transition[s][act][t] - b.transition[s][act][t]);
      worst = std::max(worst, l1);
    }
  }
  return worst / *std::min_element(a.discount.begin(), a.discount.end());
}

MixedStationary prune_strategy(const MixedStationary& strat, const Rational& threshold) {
  MixedStationary out = strat;
  for (auto& row : out.rows) {
    Rational kept = 0;
    for (auto& p : row) {
      if (p <= threshold) p = 0;
      kept += p;
    }
    if (sgn(kept) == 0) throw Error("pruning removed every action of a row");
    for (auto& p : row) p /= kept;
  }
  return out;
}

}  // namespace csg
