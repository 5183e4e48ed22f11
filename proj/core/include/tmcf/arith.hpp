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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmcf {

using BigInt = mpz_class;

// Raised by every exact division whose divisor is zero. The message carries
// the operation that was being performed.
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& context)
      : std::domain_error("division by zero: " + context) {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const BigInt& x);
BigInt parse_bigint(std::string_view text);

// Exact rational in lowest terms with a strictly positive denominator.
// Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p" or "p/q" with optional leading sign on p.
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  Rational inverse() const;

  // "p/q", or "p" when q == 1.
  std::string to_string() const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

// 2-adic valuation: an integer, or +infinity for the valuation of zero.
// Addition saturates at +infinity.
class Valuation2 {
 public:
  static Valuation2 infinity() { return Valuation2(); }
  static Valuation2 finite(std::int64_t v) { return Valuation2(v); }

  bool is_infinite() const { return !value_.has_value(); }
  // Precondition: !is_infinite().
  std::int64_t value() const;

  std::string to_string() const;

  friend Valuation2 operator+(const Valuation2& a, const Valuation2& b);
  // inf - finite = inf; finite - inf and inf - inf are undefined and throw.
  friend Valuation2 operator-(const Valuation2& a, const Valuation2& b);

  friend bool operator==(const Valuation2&, const Valuation2&) = default;
  friend std::strong_ordering operator<=>(const Valuation2& a, const Valuation2& b);

 private:
  Valuation2() = default;
  explicit Valuation2(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

Valuation2 min(const Valuation2& a, const Valuation2& b);

Valuation2 nu2(const BigInt& x);
Valuation2 nu2(const Rational& x);

}  // namespace tmcf
