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


#include "csg/mc_pipeline.hpp"

#include <deque>

#include "csg/kernel.hpp"
#include "csg/linalg.hpp"

namespace csg {
namespace {

void check_precision(std::size_t n, std::int64_t ell, PrecisionPolicy policy) {
  if (ell < 2) throw Error("precision must be at least 2");
  if (policy == PrecisionPolicy::kEnforce && static_cast<std::uint64_t>(ell) < 1000ull * n * n) {
    throw Error("precision too small: need ell >= 1000 n^2");
  }
}

}  // namespace

ReachMC mc_discounted_to_reachability(const InducedMC& mc) {
  const std::size_t n = mc.num_states();
  ReachMC out;
  out.top = n;
  out.bot = n + 1;
  out.transition.assign(n + 2, RationalVector(n + 2, Rational(0)));
  for (std::size_t s = 0; s < n; ++s) {
    const Rational& lambda = mc.discount[s];
    if (sgn(lambda) <= 0) throw ValidationError("discount 0 at state " + std::to_string(s));
    for (std::size_t t = 0; t < n; ++t) out.transition[s][t] = (1 - lambda) * mc.transition[s][t];
    out.transition[s][out.top] = lambda * mc.reward[s];
    out.transition[s][out.bot] = lambda * (1 - mc.reward[s]);
  }
  out.transition[out.top][out.top] = 1;
  out.transition[out.bot][out.bot] = 1;
  return out;
}

RoundedChain fp_round_chain(const InducedMC& mc, std::int64_t ell, PrecisionPolicy policy) {
  const std::size_t n = mc.num_states();
  check_precision(n, ell, policy);
  const ReachMC exact = mc_discounted_to_reachability(mc);
  const FpNumber one = FpNumber::exact(1, ell);

  RoundedChain out;
  out.chain.top = n;
  out.chain.bot = n + 1;
  out.chain.transition.assign(n + 2, RationalVector(n + 2, Rational(0)));
  out.chain.transition[n][n] = 1;
  out.chain.transition[n + 1][n + 1] = 1;
  out.max_rel = 0;
  out.rel_bound = Rational(6 * static_cast<long>(n)) * pow2(-ell);
  out.close = true;

  for (std::size_t s = 0; s < n; ++s) {
    FpNumber lambda = FpNumber::truncate(mc.discount[s], ell);
    FpNumber reward = FpNumber::truncate(mc.reward[s], ell);
    FpNumber keep = fp_sub(one, lambda);
    std::vector<FpNumber> row;
    row.reserve(n + 2);
    for (std::size_t t = 0; t < n; ++t) row.push_back(fp_mul(keep, FpNumber::truncate(mc.transition[s][t], ell)));
    row.push_back(fp_mul(lambda, reward));
    row.push_back(fp_mul(lambda, fp_sub(one, reward)));

    RationalVector probs = normalize_to_fp_distribution(row).probabilities();
    for (std::size_t t = 0; t < n + 2; ++t) {
      const Rational& p1 = exact.transition[s][t];
      const Rational& p3 = probs[t];
      out.chain.transition[s][t] = p3;
      if (sgn(p1) == 0 || sgn(p3) == 0) {
        if (p1 != p3) {
          out.close = false;
          throw Error("rounding changed the support of a transition row");
        }
        continue;
      }
      out.max_rel = std::max(out.max_rel, rel_distance(p1, p3));
      if (!is_close(p1, p3, ell, 3 * static_cast<std::int64_t>(n) + 3)) out.close = false;
    }
  }
  return out;
}

void validate_absorbing(const ReachMC& reach) {
  const std::size_t k = reach.num_states();
  if (reach.top >= k || reach.bot >= k) throw ValidationError("absorbing state index out of range");
  for (std::size_t s : {reach.top, reach.bot}) {
    if (reach.transition[s][s] != 1) throw ValidationError("top and bot must self-loop with probability 1");
  }
  // Reverse search from the absorbing states.
  std::vector<bool> seen(k, false);
  std::deque<std::size_t> queue{reach.top, reach.bot};
  seen[reach.top] = seen[reach.bot] = true;
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < k; ++s) {
      if (!seen[s] && sgn(reach.transition[s][t]) > 0) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (!seen[s]) throw ValidationError("chain is not absorbing: state " + std::to_string(s) + " never absorbs");
  }
}

RationalVector reach_value(const ReachMC& reach) {
  validate_absorbing(reach);
  const std::size_t k = reach.num_states();
  std::vector<std::size_t> transient;
  for (std::size_t s = 0; s < k; ++s) {
    if (s != reach.top && s != reach.bot) transient.push_back(s);
  }
  RationalVector out(k, Rational(0));
  out[reach.top] = 1;
  if (transient.empty()) return out;

  // (I - Q) x = b over transient states.
  const std::size_t t = transient.size();
  RatMatrix m(t, t);
  RationalVector b(t);
  for (std::size_t i = 0; i < t; ++i) {
    const auto& row = reach.transition[transient[i]];
    for (std::size_t j = 0; j < t; ++j) m(i, j) = (i == j ? Rational(1) : Rational(0)) - row[transient[j]];
    b[i] = row[reach.top];
  }
  RationalVector x = solve_linear(m, b);
  for (std::size_t i = 0; i < t; ++i) out[transient[i]] = x[i];
  return out;
}

McApproximation mc_discounted_approx(const InducedMC& mc, std::int64_t ell, PrecisionPolicy policy) {
  const std::size_t n = mc.num_states();
  check_precision(n, ell, policy);
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = FpNumber::representable(mc.discount[s], ell) && FpNumber::representable(mc.reward[s], ell);
    for (const auto& p : mc.transition[s]) ok = ok && FpNumber::representable(p, ell);
    if (!ok) throw ValidationError("chain data at state " + std::to_string(s) + " is not representable with ell bits");
  }

  RoundedChain rounded = fp_round_chain(mc, ell, policy);
  RationalVector approx = reach_value(rounded.chain);

  McApproximation out;
  out.exact = discounted_values(mc);
  out.max_error = 0;
  const Integer n4 = Integer(static_cast<unsigned long>(n)) * n * n * n;
  out.bound = Rational(Integer(104 * n4)) * pow2(-ell);
  for (std::size_t s = 0; s < n; ++s) {
    out.values.push_back(FpNumber::truncate(approx[s], ell));
    out.max_error = std::max(out.max_error, Rational(abs(out.values.back().value() - out.exact[s])));
  }
  return out;
}

}  // namespace csg
