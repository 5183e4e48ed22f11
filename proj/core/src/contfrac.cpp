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

#include "tmcf/contfrac.hpp"

#include <utility>

namespace tmcf {

BigInt RegularCF::max_quotient() const {
  if (quotients.empty()) return a0;
  BigInt m = quotients.front();
  for (const auto& a : quotients) {
    if (a > m) m = a;
  }
  return m;
}

std::string RegularCF::to_string() const {
  std::string s = "[" + a0.get_str();
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    s += (i == 0 ? "; " : ", ") + quotients[i].get_str();
  }
  return s + "]";
}

RegularCF rcf_of_rational(const BigInt& p, const BigInt& q) {
  if (q < 1) throw std::invalid_argument("rcf_of_rational: denominator must be positive");
  if (p < 0) throw std::invalid_argument("rcf_of_rational: numerator must be non-negative");
  RegularCF cf;
  BigInt num = p, den = q, a, r;
  mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  cf.a0 = a;
  num = std::move(den);
  den = std::move(r);
  while (den != 0) {
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    cf.quotients.push_back(a);
    num.swap(den);
    den.swap(r);
  }
  // Euclid already ends with a quotient >= 2 except in degenerate inputs
  if (cf.quotients.size() >= 2 && cf.quotients.back() == 1) {
    cf.quotients.pop_back();
    cf.quotients.back() += 1;
  }
  return cf;
}

RegularCF rcf_of_rational(const Rational& x) { return rcf_of_rational(x.num_ref(), x.den_ref()); }

Rational fold(const RegularCF& cf) {
  if (cf.quotients.empty()) return Rational(cf.a0);
  BigInt num = cf.quotients.back(), den = 1;
  for (std::size_t i = cf.quotients.size() - 1; i-- > 0;) {
    BigInt next = cf.quotients[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return Rational(cf.a0 * num + den, num);
}

ConvergentTable convergents(const RegularCF& cf) {
  ConvergentTable t;
  t.p.reserve(cf.quotients.size() + 1);
  t.q.reserve(cf.quotients.size() + 1);
  t.p.push_back(cf.a0);
  t.q.push_back(1);
  BigInt p_prev = 1, q_prev = 0;
  for (const auto& a : cf.quotients) {
    BigInt p = a * t.p.back() + p_prev;
    BigInt q = a * t.q.back() + q_prev;
    p_prev = t.p.back();
    q_prev = t.q.back();
    t.p.push_back(std::move(p));
    t.q.push_back(std::move(q));
  }
  return t;
}

GeneralizedCF::GeneralizedCF(std::vector<Term> terms, Poly leading)
    : terms_(std::move(terms)), leading_(std::move(leading)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].numerator.is_zero()) {
      throw std::invalid_argument("generalized continued fraction: zero partial numerator at term " +
                                  std::to_string(i + 1));
    }
  }
}

ZeroIntermediateDenominator::ZeroIntermediateDenominator(std::size_t depth)
    : DivisionByZero("generalized continued fraction: zero intermediate denominator at depth " +
                     std::to_string(depth)),
      depth_(depth) {}

RationalFunction gcf_eval(const GeneralizedCF& g) {
  const auto& terms = g.terms();
  if (terms.empty()) return RationalFunction(g.leading());
  // Tail value num/den; both are rescaled to keep den monic, which leaves the
  // ratio unchanged and keeps coefficient growth in check.
  Poly num = terms.back().numerator;
  Poly den = terms.back().denominator;
  if (den.is_zero()) throw ZeroIntermediateDenominator(terms.size());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    const Rational s = den.lead().inverse();
    num *= s;
    den *= s;
    Poly next_den = terms[i].denominator * den + num;
    if (next_den.is_zero()) throw ZeroIntermediateDenominator(i + 1);
    num = terms[i].numerator * den;
    den = std::move(next_den);
  }
  return RationalFunction(g.leading() * den + num, den);
}

GeneralizedCF even_contraction(const GeneralizedCF& g) {
  const auto& t = g.terms();
  if (t.empty() || t.size() % 2 != 0) {
    throw ShapeMismatch("even_contraction: expected a nonzero even number of terms, got " +
                        std::to_string(t.size()));
  }
  if (!g.leading().is_zero()) throw ShapeMismatch("even_contraction: expected a zero leading term");
  const Poly z_plus = Poly::linear(1, 1);
  const Poly z_minus = Poly::linear(1, -1);
  std::vector<Rational> v;
  v.reserve(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j].numerator.degree() != 0) {
      throw ShapeMismatch("even_contraction: partial numerator " + std::to_string(j) +
                          " is not a constant");
    }
    if (t[j].denominator != (j % 2 == 0 ? z_plus : z_minus)) {
      throw ShapeMismatch("even_contraction: partial denominator " + std::to_string(j) +
                          " breaks the alternating z+1, z-1 pattern");
    }
    v.push_back(t[j].numerator.lead());
  }
  const Poly z2_minus_1 = z_plus * z_minus;
  const std::size_t n = t.size() / 2;
  std::vector<GeneralizedCF::Term> out;
  out.reserve(n);
  out.push_back({z_minus * v[0], z2_minus_1 + Poly(v[1])});
  for (std::size_t j = 2; j <= n; ++j) {
    out.push_back({Poly(-(v[2 * j - 3] * v[2 * j - 2])), z2_minus_1 + Poly(v[2 * j - 1] + v[2 * j - 2])});
  }
  return GeneralizedCF(std::move(out));
}

}  // namespace tmcf
