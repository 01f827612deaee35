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


#include "csg/fp.hpp"

#include <algorithm>

namespace csg {
namespace {

std::int64_t bits_of(const Integer& z) { return static_cast<std::int64_t>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

// q * 2^-e as a rational.
Rational scaled(const Rational& q, std::int64_t e) { return q * pow2(-e); }

void require_same(const FpNumber& a, const FpNumber& b) {
  if (a.precision() != b.precision()) throw Error("floating-point precision mismatch");
}

}  // namespace

FpNumber FpNumber::truncate(const Rational& q, std::int64_t ell) {
  if (ell < 1) throw Error("precision must be at least 1");
  if (sgn(q) < 0) throw Error("negative floating-point value");
  FpNumber out;
  out.ell_ = ell;
  if (sgn(q) == 0) return out;

  // k = floor(log2 q).
  std::int64_t k = bits_of(q.get_num()) - bits_of(q.get_den());
  if (q < pow2(k)) --k;
  std::int64_t e = k - ell + 1;
  Integer m = floor(scaled(q, e));
  std::int64_t tz = static_cast<std::int64_t>(mpz_scan1(m.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
  out.mantissa_ = m;
  out.exponent_ = e + tz;
  return out;
}

bool FpNumber::representable(const Rational& q, std::int64_t ell) {
  return sgn(q) >= 0 && truncate(q, ell).value() == q;
}

FpNumber FpNumber::exact(const Rational& q, std::int64_t ell) {
  FpNumber f = truncate(q, ell);
  if (f.value() != q) throw Error(to_string(q) + " is not representable with " + std::to_string(ell) + " bits");
  return f;
}

Rational FpNumber::value() const { return Rational(mantissa_) * pow2(exponent_); }

FpNumber fp_add(const FpNumber& a, const FpNumber& b) {
  require_same(a, b);
  return FpNumber::truncate(a.value() + b.value(), a.precision());
}

FpNumber fp_sub(const FpNumber& a, const FpNumber& b) {
  require_same(a, b);
  Rational d = a.value() - b.value();
  if (sgn(d) < 0) throw Error("floating-point subtraction would be negative");
  return FpNumber::truncate(d, a.precision());
}

FpNumber fp_mul(const FpNumber& a, const FpNumber& b) {
  require_same(a, b);
  return FpNumber::truncate(a.value() * b.value(), a.precision());
}

FpNumber fp_div(const FpNumber& a, const FpNumber& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error("floating-point division by zero");
  return FpNumber::truncate(a.value() / b.value(), a.precision());
}

Rational rel_distance(const Rational& x, const Rational& y) {
  if (sgn(x) <= 0 || sgn(y) <= 0) throw Error("relative distance needs positive arguments");
  return std::max(x / y, y / x) - 1;
}

Rational closeness_bound(std::int64_t ell, std::int64_t i) {
  if (ell < 1 || i < 0) throw Error("closeness needs ell >= 1 and i >= 0");
  if (ell == 1 && i > 0) throw Error("closeness bound is unbounded for ell = 1");
  Rational base = 1 - pow2(1 - ell);
  return 1 / pow(base, static_cast<std::uint64_t>(i)) - 1;
}

bool is_close(const Rational& x, const Rational& y, std::int64_t ell, std::int64_t i) {
  if (ell < 1 || i < 0) throw Error("closeness needs ell >= 1 and i >= 0");
  if (ell == 1 && i > 0) return true;
  if (x == y) return true;
  if (sgn(x) <= 0 || sgn(y) <= 0) return false;
  return rel_distance(x, y) <= closeness_bound(ell, i);
}

Rational FpDistribution::total() const {
  Rational t = 0;
  for (const auto& w : weights) t += w.value();
  return t;
}

Rational FpDistribution::prob(std::size_t i) const { return weights.at(i).value() / total(); }

RationalVector FpDistribution::probabilities() const {
  Rational t = total();
  RationalVector out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(w.value() / t);
  return out;
}

FpDistribution normalize_to_fp_distribution(const std::vector<FpNumber>& xs) {
  if (xs.empty()) throw Error("cannot normalize an empty list");
  const std::int64_t ell = xs.front().precision();
  FpNumber total = FpNumber::truncate(0, ell);
  Rational exact_total = 0;
  for (const auto& x : xs) {
    total = fp_add(total, x);
    exact_total += x.value();
  }
  if (total.is_zero()) throw Error("cannot normalize an all-zero list");

  FpDistribution out;
  out.ell = ell;
  for (const auto& x : xs) out.weights.push_back(fp_div(x, total));

  const auto t = static_cast<std::int64_t>(xs.size());
  if (!is_close(out.total(), 1, ell, t)) throw Error("normalized weights do not sum close to 1");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!is_close(out.prob(i), xs[i].value() / exact_total, ell, 2 * t)) {
      throw Error("normalized distribution exceeds its closeness bound");
    }
  }
  return out;
}

FpDistribution normalize_exact_distribution(const RationalVector& p, std::int64_t ell) {
  std::vector<FpNumber> xs;
  xs.reserve(p.size());
  for (const auto& q : p) xs.push_back(FpNumber::truncate(q, ell));
  FpDistribution out = normalize_to_fp_distribution(xs);
  Rational sum = 0;
  for (const auto& q : p) sum += q;
  const auto t = static_cast<std::int64_t>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_close(out.prob(i), p[i] / sum, ell, 2 * t + 2)) {
      throw Error("rounded distribution exceeds its closeness bound");
    }
  }
  return out;
}

}  // namespace csg
