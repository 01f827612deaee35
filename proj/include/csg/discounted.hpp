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


#ifndef CSG_DISCOUNTED_HPP
#define CSG_DISCOUNTED_HPP

#include <cstddef>

#include "csg/game.hpp"
#include "csg/kernel.hpp"

namespace csg {

struct Bracket {
  Rational lo;
  Rational hi;
  std::size_t iterations = 0;
};

struct DiscountedResult {
  Rational value;
  Bracket bracket;
};

/// val(W(z)); positive below the discounted value, negative above it.
Rational w_value(const KernelCache& cache, const Rational& z);
int w_sign(const KernelCache& cache, const Rational& z);

/// Bisection on [0, 1] driven by the sign of val(W(z)). Runs exactly
/// ceil(log2(1/eps)) rounds and returns the bracket midpoint.
DiscountedResult approx_discounted(const KernelCache& cache, const Rational& eps);
DiscountedResult approx_discounted(const Game& g, std::size_t state, const DiscountSpec& disc, const Rational& eps);

}  // namespace csg

#endif  // CSG_DISCOUNTED_HPP
