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


#include "csg/poly.hpp"

#include <algorithm>
#include <random>

namespace csg {

MultiPoly::MultiPoly(std::vector<std::uint32_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw Error("polynomial needs at least one variable");
}

std::uint32_t MultiPoly::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != num_vars()) throw Error("exponent vector has the wrong arity");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > degrees_[i]) throw Error("exponent exceeds the declared degree");
  }
  Integer& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

std::uint64_t MultiPoly::coefficient_bits() const {
  std::uint64_t b = 0;
  for (const auto& [e, c] : terms_) b = std::max(b, bit_size(Integer(abs(c))));
  return b;
}

Rational eval_poly(const MultiPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.num_vars()) throw Error("evaluation point has the wrong arity");
  // Power tables per variable.
  std::vector<RationalVector> powers(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    powers[i].push_back(1);
    for (std::uint32_t k = 1; k <= p.degrees()[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term(c);
    for (std::size_t i = 0; i < e.size(); ++i) term *= powers[i][e[i]];
    sum += term;
  }
  return sum;
}

std::uint64_t region_constant(const MultiPoly& p) {
  if (p.is_zero()) throw Error("region constant of the zero polynomial");
  std::uint64_t l = p.num_vars();
  return 4 * l * bit_size(Integer(p.max_degree())) + p.coefficient_bits() + 1;
}

RegionReport sample_region_check(const MultiPoly& p, std::size_t samples, std::uint64_t seed) {
  RegionReport rep;
  rep.b1 = region_constant(p);
  const std::uint64_t l = p.num_vars();
  const std::uint64_t dp1 = p.max_degree() + 1;
  constexpr std::int64_t kq = 16;  // extra grid bits per coordinate
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, std::uint64_t{1} << kq);

  const Rational scale = pow2(static_cast<std::int64_t>(rep.b1) - static_cast<std::int64_t>(l));
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<Rational> x(l);
    // x_1 = u 2^-(B1 + q), x_i = u 2^-q x_{i-1}^(D+1), u in [1, 2^q].
    x[0] = Rational(Integer(static_cast<unsigned long>(pick(rng)))) * pow2(-static_cast<std::int64_t>(rep.b1) - kq);
    for (std::size_t i = 1; i < l; ++i) {
      x[i] = Rational(Integer(static_cast<unsigned long>(pick(rng)))) * pow2(-kq) * pow(x[i - 1], dp1);
    }
    ++rep.samples;
    if (abs(eval_poly(p, x)) < scale * pow(x[l - 1], dp1)) ++rep.violations;
  }
  return rep;
}

}  // namespace csg
