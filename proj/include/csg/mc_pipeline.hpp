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


#ifndef CSG_MC_PIPELINE_HPP
#define CSG_MC_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "csg/fp.hpp"
#include "csg/game.hpp"

namespace csg {

/// Chain with two absorbing states: top (target) and bot.
struct ReachMC {
  std::vector<RationalVector> transition;
  std::size_t top = 0;
  std::size_t bot = 0;

  std::size_t num_states() const { return transition.size(); }
};

/// Whether to enforce ell >= 1000 n^2 where the error chain assumes it.
enum class PrecisionPolicy { kEnforce, kRelaxed };

/// States 0..n-1 keep their index; top = n, bot = n + 1.
ReachMC mc_discounted_to_reachability(const InducedMC& mc);

struct RoundedChain {
  ReachMC chain;
  Rational max_rel;     // max entrywise rel distance to the exact chain
  Rational rel_bound;   // 6 n 2^-ell
  bool close = false;   // every row (ell, 3n + 3)-close to the exact chain
};

/// Builds the reachability rows with truncating operations from the chain's
/// data, then rounds each row to a floating-point distribution. Chain data
/// is truncated to ell bits first.
RoundedChain fp_round_chain(const InducedMC& mc, std::int64_t ell, PrecisionPolicy policy = PrecisionPolicy::kEnforce);

/// Exact probability of reaching top from every state. Throws if some state
/// cannot reach an absorbing state.
RationalVector reach_value(const ReachMC& reach);

void validate_absorbing(const ReachMC& reach);

struct McApproximation {
  std::vector<FpNumber> values;
  RationalVector exact;
  Rational max_error;
  Rational bound;  // 104 n^4 2^-ell

  bool within_bound() const { return max_error <= bound; }
};

/// Floating-point approximation of the discounted values of a chain whose
/// data is representable with ell bits.
McApproximation mc_discounted_approx(const InducedMC& mc, std::int64_t ell,
                                     PrecisionPolicy policy = PrecisionPolicy::kEnforce);

}  // namespace csg

#endif  // CSG_MC_PIPELINE_HPP
