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


#include "csg/discounted.hpp"

namespace csg {

Rational w_value(const KernelCache& cache, const Rational& z) { return game_value(cache.w(z)).value; }

int w_sign(const KernelCache& cache, const Rational& z) { return sgn(w_value(cache, z)); }

DiscountedResult approx_discounted(const KernelCache& cache, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error("epsilon must be positive");
  Bracket b{Rational(0), Rational(1), 0};
  while (b.hi - b.lo > eps) {
    Rational z = (b.lo + b.hi) / 2;
    if (w_sign(cache, z) >= 0) {
      b.lo = z;
    } else {
      b.hi = z;
    }
    ++b.iterations;
  }
  return {(b.lo + b.hi) / 2, b};
}

DiscountedResult approx_discounted(const Game& g, std::size_t state, const DiscountSpec& disc, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error("epsilon must be positive");
  if (!g.has_rewards()) throw ValidationError("discounted objective needs rewards");
  if (state >= g.num_states()) throw Error("state index out of range");
  return approx_discounted(KernelCache(g, disc, state), eps);
}

}  // namespace csg
