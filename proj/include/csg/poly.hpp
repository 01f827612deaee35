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


#ifndef CSG_POLY_HPP
#define CSG_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "csg/rational.hpp"

namespace csg {

/// Sparse multivariate polynomial with integer coefficients.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  /// `degrees` bounds the exponent of each variable.
  explicit MultiPoly(std::vector<std::uint32_t> degrees);

  std::size_t num_vars() const { return degrees_.size(); }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  std::uint32_t max_degree() const;
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^e; zero sums are dropped.
  void add_term(const Exponents& e, const Integer& c);

  /// Largest bit size of a coefficient.
  std::uint64_t coefficient_bits() const;

 private:
  std::vector<std::uint32_t> degrees_;
  std::map<Exponents, Integer> terms_;
};

Rational eval_poly(const MultiPoly& p, const std::vector<Rational>& point);

/// B1 = 4 l bit(D) + B + 1.
std::uint64_t region_constant(const MultiPoly& p);

struct RegionReport {
  std::uint64_t b1 = 0;
  std::size_t samples = 0;
  std::size_t violations = 0;
};

/// Draws dyadic points with x_1 <= 2^-B1 and x_i <= x_{i-1}^(D+1) and
/// checks |P(x)| >= 2^(B1 - l) x_l^(D+1) exactly at each one.
RegionReport sample_region_check(const MultiPoly& p, std::size_t samples, std::uint64_t seed);

}  // namespace csg

#endif  // CSG_POLY_HPP
