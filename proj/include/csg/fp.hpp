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


#ifndef CSG_FP_HPP
#define CSG_FP_HPP

#include <cstdint>
#include <vector>

#include "csg/rational.hpp"

namespace csg {

/// Nonnegative floating-point number mantissa * 2^exponent with a mantissa
/// of at most `ell` bits. Canonical: zero is (0, 0), otherwise the mantissa
/// is odd.
class FpNumber {
 public:
  FpNumber() = default;

  /// Truncates q >= 0 to ell significant bits (toward zero).
  static FpNumber truncate(const Rational& q, std::int64_t ell);
  /// Throws unless q is exactly representable with ell bits.
  static FpNumber exact(const Rational& q, std::int64_t ell);
  static bool representable(const Rational& q, std::int64_t ell);

  const Integer& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  std::int64_t precision() const { return ell_; }
  bool is_zero() const { return mantissa_ == 0; }

  Rational value() const;

  friend bool operator==(const FpNumber&, const FpNumber&) = default;

 private:
  Integer mantissa_ = 0;
  std::int64_t exponent_ = 0;
  std::int64_t ell_ = 1;
};

FpNumber fp_add(const FpNumber& a, const FpNumber& b);
/// Requires a >= b.
FpNumber fp_sub(const FpNumber& a, const FpNumber& b);
FpNumber fp_mul(const FpNumber& a, const FpNumber& b);
/// Requires b > 0.
FpNumber fp_div(const FpNumber& a, const FpNumber& b);

/// max(x/y, y/x) - 1 for x, y > 0.
Rational rel_distance(const Rational& x, const Rational& y);

/// (1 - 2^(1-ell))^(-i) - 1. Not finite for ell = 1, i > 0.
Rational closeness_bound(std::int64_t ell, std::int64_t i);

/// rel(x, y) <= closeness_bound(ell, i). Two zeros are close; a zero and a
/// positive value are not (except when the bound is infinite).
bool is_close(const Rational& x, const Rational& y, std::int64_t ell, std::int64_t i);

/// Distribution mu(i) = w_i / sum_j w_j over floating-point weights.
struct FpDistribution {
  std::vector<FpNumber> weights;
  std::int64_t ell = 1;

  Rational total() const;
  Rational prob(std::size_t i) const;
  RationalVector probabilities() const;
};

/// mu_i = x_i / (x_1 + ... + x_t) with truncating operations. The result is
/// checked to be (ell, 2t)-close to the exact quotient.
FpDistribution normalize_to_fp_distribution(const std::vector<FpNumber>& xs);

/// Truncates an exact distribution entrywise, then normalizes. Checked
/// (ell, 2t + 2)-close to the input.
FpDistribution normalize_exact_distribution(const RationalVector& p, std::int64_t ell);

}  // namespace csg

#endif  // CSG_FP_HPP
