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

#ifndef CSG_RATIONAL_HPP
#define CSG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csg {

// mpq_class keeps values canonical (positive denominator, lowest terms), so
// equality and bit-size accounting are well defined without extra work.
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised when an input is larger than a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// bit(k) = ceil(log2(k + 1)) for k >= 1. Throws for k <= 0.
std::uint64_t bit_size(const Integer& k);

/// bit(p/q) = bit(|p|) + bit(q). A zero numerator contributes bit(0) = 0.
std::uint64_t bit_size(const Rational& q);

/// Parses "p/q", "p", or "-p/q". Throws ValidationError on malformed text or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);

/// Fixed-point decimal rendering truncated toward zero.
std::string to_decimal(const Rational& q, int digits = 12);

/// 2^e for any signed exponent.
Rational pow2(std::int64_t e);

Rational pow(const Rational& base, std::uint64_t e);

Rational abs(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);

/// Least common multiple of all denominators.
Integer common_denominator(std::span<const Rational> values);

/// Rounds q down to the dyadic grid 2^-bits.
Rational floor_to_dyadic(const Rational& q, std::uint64_t bits);

/// True iff q = m * 2^e for integers m, e.
bool is_dyadic(const Rational& q);

}  // namespace csg

#endif  // CSG_RATIONAL_HPP
