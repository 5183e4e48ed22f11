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

#include "tmcf/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <utility>

namespace tmcf {

void Limits::check_degree(std::size_t degree, std::string_view what) const {
  if (degree > max_degree) {
    throw ResourceLimitExceeded(std::string(what) + ": degree " + std::to_string(degree) +
                                " exceeds the configured maximum " +
                                std::to_string(max_degree));
  }
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& c1, const Rational& c0) { return Poly({c0, c1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::lead() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

std::size_t Poly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return 0;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const Rational inv = lead().inverse();
  Poly r = *this;
  r *= inv;
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::substitute_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
  if (c_.empty()) return {};
  std::vector<Rational> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return Poly(std::move(v));
}

std::vector<BigInt> Poly::primitive_integer_coeffs() const {
  std::vector<BigInt> out;
  if (c_.empty()) return out;
  BigInt l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  BigInt g = 0;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    BigInt v = c.num() * (l / c.den_ref());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t n = c_.size(); n-- > 0;) {
    const Rational& c = c_[n];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = c.abs();
    const bool unit = (a == Rational(1));
    if (n == 0) {
      out += a.to_string();
      continue;
    }
    if (!unit) out += a.to_string() + "*";
    out += "z";
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

std::vector<std::string> Poly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
    }
    std::size_t end = i;
    while (end < s.size() && s[end] != '+' && s[end] != '-') {
      // exponents are unsigned; a sign right after '^' or '*' is malformed
      ++end;
    }
    const std::string term = s.substr(i, end - i);
    if (term.empty()) throw ParseError("empty term in polynomial '" + s + "'");
    Rational coeff(1);
    std::size_t degree = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = Rational::parse(term);
    } else {
      if (zpos > 0) {
        if (term[zpos - 1] != '*' || zpos < 2) {
          throw ParseError("malformed term '" + term + "'");
        }
        coeff = Rational::parse(term.substr(0, zpos - 1));
      }
      const std::string rest = term.substr(zpos + 1);
      if (rest.empty()) {
        degree = 1;
      } else if (rest[0] == '^' && rest.size() > 1 &&
                 std::all_of(rest.begin() + 1, rest.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        degree = std::stoul(rest.substr(1));
      } else {
        throw ParseError("malformed exponent in term '" + term + "'");
      }
    }
    if (negative) coeff = -coeff;
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += coeff;
    i = end;
  }
  return Poly(std::move(coeffs));
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  mpq_class t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const mpq_class& ai = a.c_[i].raw();
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      mpq_mul(t.get_mpq_t(), ai.get_mpq_t(), b.c_[j].raw().get_mpq_t());
      acc[i + j] += t;
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& x : acc) out.emplace_back(x.get_num(), x.get_den());
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  const auto db = static_cast<std::size_t>(b.degree());
  const auto da = static_cast<std::size_t>(a.degree());
  const auto bc = b.coeffs();
  const Rational inv_lead = b.lead().inverse();
  const bool monic = b.lead() == Rational(1);

  std::vector<mpq_class> r;
  r.reserve(da + 1);
  for (const auto& c : a.coeffs()) r.push_back(c.raw());
  std::vector<Rational> q(da - db + 1);
  mpq_class t;
  for (std::size_t n = da + 1; n-- > db;) {
    if (sgn(r[n]) == 0) continue;
    mpq_class coef = monic ? r[n] : mpq_class(r[n] * inv_lead.raw());
    const std::size_t shift = n - db;
    for (std::size_t j = 0; j < db; ++j) {
      if (bc[j].is_zero()) continue;
      mpq_mul(t.get_mpq_t(), coef.get_mpq_t(), bc[j].raw().get_mpq_t());
      r[shift + j] -= t;
    }
    r[n] = 0;
    q[shift] = Rational(coef.get_num(), coef.get_den());
  }
  std::vector<Rational> rem;
  rem.reserve(db);
  for (std::size_t j = 0; j < db; ++j) rem.emplace_back(r[j].get_num(), r[j].get_den());
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

namespace {

__extension__ using uint128 = unsigned __int128;

// Coprimality certificate modulo a word-size prime. If the images of a and b
// keep their degrees and have a constant gcd mod p, then gcd(a, b) = 1 over Q.
class ModPrime {
 public:
  explicit ModPrime(std::uint64_t p) : p_(p) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % p_);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  // Reduces the integer-cleared form; empty result when p divides a denominator.
  std::vector<std::uint64_t> reduce(const Poly& f) const {
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
      const std::uint64_t d = mpz_fdiv_ui(c.den_ref().get_mpz_t(), p_);
      if (d == 0) return {};
      const std::uint64_t n = mpz_fdiv_ui(c.num_ref().get_mpz_t(), p_);
      out.push_back(mul(n, inv(d)));
    }
    return out;
  }

  // Degree of gcd mod p; both inputs have nonzero leading coefficients.
  std::size_t gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) const {
    auto trim = [](std::vector<std::uint64_t>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
      const std::uint64_t il = inv(b.back());
      while (a.size() >= b.size()) {
        const std::uint64_t f = mul(a.back(), il);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
          a[shift + j] = sub(a[shift + j], mul(f, b[j]));
        }
        trim(a);
        if (a.empty()) break;
      }
      std::swap(a, b);
    }
    return a.size() - 1;
  }

 private:
  std::uint64_t p_;
};

bool certified_coprime(const Poly& a, const Poly& b) {
  static constexpr std::array<std::uint64_t, 3> kPrimes = {
      2305843009213693951ULL, 4611686018427387847ULL, 1000000000000000003ULL};
  for (const std::uint64_t p : kPrimes) {
    ModPrime field(p);
    auto ra = field.reduce(a);
    auto rb = field.reduce(b);
    if (ra.empty() || rb.empty() || ra.back() == 0 || rb.back() == 0) continue;
    return field.gcd_degree(std::move(ra), std::move(rb)) == 0;
  }
  return false;
}

Poly shift_down(const Poly& p, std::size_t k) {
  if (k == 0) return p;
  const auto c = p.coeffs();
  return Poly(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

}  // namespace

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  const std::size_t k = std::min(num.low_order(), den.low_order());
  num = shift_down(num, k);
  den = shift_down(den, k);
  if (num.degree() > 0 && den.degree() > 0 && !certified_coprime(num, den)) {
    const Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_divmod(num, g).quotient;
      den = poly_divmod(den, g).quotient;
    }
  }
  const Rational inv = den.lead().inverse();
  num *= inv;
  den *= inv;
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole " + x.to_string());
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::substitute_power(std::size_t k) const {
  return RationalFunction(num_.substitute_power(k), den_.substitute_power(k), Reduced{});
}

std::string RationalFunction::to_string() const {
  if (den_ == Poly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

namespace {

std::size_t checked_pow(std::size_t base, unsigned exp, const Limits& limits, std::string_view what) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > limits.max_degree) break;
    r *= base;
  }
  limits.check_degree(r, what);
  return r;
}

// p * (z^shift + mid*z^half + low) for sparse trinomial factors.
Poly times_sparse(const Poly& p, std::size_t shift, const Rational& mid, std::size_t half,
                  const Rational& low) {
  const auto c = p.coeffs();
  std::vector<Rational> out(c.size() + shift);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i + shift] += c[i];
    if (!mid.is_zero()) out[i + half] += mid * c[i];
    out[i] += low * c[i];
  }
  return Poly(std::move(out));
}

}  // namespace

RationalFunction expand_f(unsigned ell, const Limits& limits) {
  const std::size_t n = checked_pow(2, ell + 1, limits, "expand_f") - 1;
  Poly num(Rational(1));
  for (unsigned h = 0; h <= ell; ++h) {
    const std::size_t e = std::size_t{1} << h;
    num = times_sparse(num, e, Rational(0), 0, Rational(-1));
  }
  // constant term is +-1, so num and z^n are coprime
  return RationalFunction(std::move(num), Poly::monomial(Rational(1), n));
}

RationalFunction expand_g(unsigned ell, const Limits& limits) {
  const RationalFunction f = expand_f(ell, limits);
  return RationalFunction(f.num(), f.den() * Poly::z());
}

RationalFunction expand_gtilde(long u, long v, unsigned ell, const Limits& limits) {
  if (u == 0 || v == 0) throw std::invalid_argument("expand_gtilde: u and v must be nonzero");
  if (BigInt(u) * u == v) throw std::invalid_argument("expand_gtilde: requires u^2 != v");
  const std::size_t n = checked_pow(3, ell + 1, limits, "expand_gtilde");
  Poly num(Rational(1));
  std::size_t e = 1;
  for (unsigned h = 0; h <= ell; ++h, e *= 3) {
    num = times_sparse(num, 2 * e, Rational(u), e, Rational(v));
  }
  return RationalFunction(std::move(num), Poly::monomial(Rational(1), n));
}

std::vector<long> PolyCF::degrees() const {
  std::vector<long> d;
  d.reserve(quotients.size());
  for (const auto& q : quotients) d.push_back(q.degree());
  return d;
}

PolyCF poly_cf(const RationalFunction& rf) {
  PolyCF cf;
  auto [ip, rem] = poly_divmod(rf.num(), rf.den());
  cf.integer_part = std::move(ip);
  if (rem.is_zero()) return cf;

  // Work with monic remainders; the true remainder is scale * monic.
  Rational prev_scale(1);  // den is monic
  Poly prev = rf.den();
  Rational scale = rem.lead();
  Poly cur = rem.monic();
  while (true) {
    auto [q, r] = poly_divmod(prev, cur);
    cf.quotients.push_back(q * (prev_scale / scale));
    if (r.is_zero()) break;
    Rational next_scale = prev_scale * r.lead();
    prev = std::move(cur);
    prev_scale = std::move(scale);
    cur = r.monic();
    scale = std::move(next_scale);
  }
  return cf;
}

RationalFunction fold(const PolyCF& cf) {
  if (cf.quotients.empty()) return RationalFunction(cf.integer_part);
  // Tail T = num/den, starting from the last quotient.
  Poly num = cf.quotients.back();
  Poly den(Rational(1));
  for (std::size_t i = cf.quotients.size() - 1; i-- > 0;) {
    Poly next = cf.quotients[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  if (num.is_zero()) throw DivisionByZero("continued fraction fold: vanishing tail");
  return RationalFunction(cf.integer_part * num + den, num);
}

}  // namespace tmcf
