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

#include "csg/rational.hpp"

#include <cctype>

namespace csg {

namespace {

std::uint64_t bit_size_nonneg(const Integer& k) {
  if (k == 0) return 0;
  // ceil(log2(k + 1)) equals the number of binary digits of k.
  return mpz_sizeinbase(k.get_mpz_t(), 2);
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::uint64_t bit_size(const Integer& k) {
  if (k <= 0) throw Error("bit size is defined for positive integers only");
  return bit_size_nonneg(k);
}

std::uint64_t bit_size(const Rational& q) {
  Integer num = q.get_num();
  if (num < 0) num = -num;
  return bit_size_nonneg(num) + bit_size_nonneg(q.get_den());
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  Rational a = abs(q);
  Integer whole = floor(a);
  Rational frac = a - whole;
  std::string out = (q < 0 ? "-" : "") + whole.get_str();
  if (digits <= 0) return out;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = floor(frac * scale);
  std::string tail = scaled.get_str();
  out += '.';
  out.append(static_cast<std::size_t>(digits) - tail.size(), '0');
  out += tail;
  return out;
}

Rational pow2(std::int64_t e) {
  Integer p = 1;
  std::uint64_t mag = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), mag);
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  return r;
}

Rational pow(const Rational& base, std::uint64_t e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer common_denominator(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Rational floor_to_dyadic(const Rational& q, std::uint64_t bits) {
  Integer scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  return Rational(scaled) * pow2(-static_cast<std::int64_t>(bits));
}

bool is_dyadic(const Rational& q) {
  const Integer& d = q.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

}  // namespace csg
