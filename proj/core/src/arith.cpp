// Copyright 2026 The tmcf Authors
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

#include "tmcf/arith.hpp"

#include <cctype>

namespace tmcf {

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ParseError("empty integer literal: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("malformed integer literal: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational construction " + num.get_str() + "/0");
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("sign not allowed in denominator: '" + std::string(text) + "'");
  }
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

Rational Rational::abs() const {
  mpq_class r = q_;
  if (sgn(r) < 0) r = -r;
  return Rational(std::move(r));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of 0");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero(to_string() + " / 0");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::int64_t Valuation2::value() const {
  if (!value_) throw std::logic_error("value() of infinite 2-adic valuation");
  return *value_;
}

std::string Valuation2::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

Valuation2 operator+(const Valuation2& a, const Valuation2& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation2::infinity();
  return Valuation2::finite(*a.value_ + *b.value_);
}

Valuation2 operator-(const Valuation2& a, const Valuation2& b) {
  if (b.is_infinite()) throw std::domain_error("subtracting an infinite 2-adic valuation");
  if (a.is_infinite()) return Valuation2::infinity();
  return Valuation2::finite(*a.value_ - *b.value_);
}

std::strong_ordering operator<=>(const Valuation2& a, const Valuation2& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.value_ <=> *b.value_;
}

Valuation2 min(const Valuation2& a, const Valuation2& b) { return (b < a) ? b : a; }

Valuation2 nu2(const BigInt& x) {
  if (x == 0) return Valuation2::infinity();
  return Valuation2::finite(static_cast<std::int64_t>(mpz_scan1(x.get_mpz_t(), 0)));
}

Valuation2 nu2(const Rational& x) {
  if (x.is_zero()) return Valuation2::infinity();
  return nu2(x.num_ref()) - nu2(x.den_ref());
}

}  // namespace tmcf
