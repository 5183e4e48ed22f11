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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tmcf/arith.hpp"

namespace tmcf {

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  static constexpr std::size_t kDefaultMaxDegree = std::size_t{1} << 17;
  // Largest denominator degree any construction may produce.
  std::size_t max_degree = kDefaultMaxDegree;

  void check_degree(std::size_t degree, std::string_view what) const;
};

// Dense polynomial over Q. coeffs()[i] is the coefficient of z^i; the
// leading coefficient is never zero and the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly z() { return monomial(Rational(1), 1); }
  // c1*z + c0
  static Poly linear(const Rational& c1, const Rational& c0);

  // "c_k*z^k + ... + c_0", with terms like "z", "-z^3", "1/2*z^2".
  static Poly parse(std::string_view text);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::span<const Rational> coeffs() const { return c_; }
  // Zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  const Rational& lead() const;
  // Multiplicity of z as a factor; 0 for the zero polynomial.
  std::size_t low_order() const;

  Poly monic() const;
  Rational eval(const Rational& x) const;
  // p(z) -> p(z^k)
  Poly substitute_power(std::size_t k) const;
  // Scale so every coefficient is an integer with overall gcd 1 and a
  // positive leading coefficient; returns the integer coefficients.
  std::vector<BigInt> primitive_integer_coeffs() const;

  std::string to_string() const;
  std::vector<std::string> to_strings() const;  // coefficient strings, index = degree

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

// a = quotient*b + remainder, deg remainder < deg b. Throws DivisionByZero
// when b is zero.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// num/den with gcd(num, den) = 1 and monic den.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Numerator degree below denominator degree.
  bool is_proper() const { return num_.degree() < den_.degree(); }

  Rational eval(const Rational& x) const;
  RationalFunction substitute_power(std::size_t k) const;
  std::string to_string() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  struct Reduced {};
  RationalFunction(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

// prod_{h=0}^{ell} (1 - z^{-2^h}) as P(z) / z^{2^{ell+1}-1}.
RationalFunction expand_f(unsigned ell, const Limits& limits = {});
// f_ell(z) / z.
RationalFunction expand_g(unsigned ell, const Limits& limits = {});
// (1/z) prod_{h=0}^{ell} (1 + u z^{-3^h} + v z^{-2*3^h}). Requires u, v
// nonzero and u^2 != v.
RationalFunction expand_gtilde(long u, long v, unsigned ell, const Limits& limits = {});

// Regular continued fraction over Q[z]: rf = integer_part + 1/(q1 + 1/(q2 + ...)).
// Quotients are exactly what Euclidean division produces; no rescaling.
struct PolyCF {
  Poly integer_part;
  std::vector<Poly> quotients;

  std::vector<long> degrees() const;
};

PolyCF poly_cf(const RationalFunction& rf);
RationalFunction fold(const PolyCF& cf);

}  // namespace tmcf
