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

#include <cstdint>

#include "doctest.h"
#include "random.hpp"
#include "tmcf/polynomial.hpp"

using namespace tmcf;
using tmcf::testing::Gen;

namespace {

Poly P(const char* s) { return Poly::parse(s); }
RationalFunction RF(const char* n, const char* d) { return RationalFunction(P(n), P(d)); }

// Sign of the k-th term of the +-1 Thue-Morse sequence, by the doubling rule
// t_{2k} = t_k, t_{2k+1} = -t_k.
int tm_by_doubling(std::uint64_t k) {
  int s = 1;
  for (; k != 0; k >>= 1) {
    if (k & 1U) s = -s;
  }
  return s;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("z^3 - z^2 - z + 1").to_string() == "z^3 - z^2 - z + 1");
  CHECK(P("1/2*z^2").to_string() == "1/2*z^2");
  CHECK(P("-z + 3*z - 2").to_string() == "2*z - 2");
  CHECK(P("0").is_zero());
  CHECK(P("0").degree() == -1);
  CHECK_THROWS_AS(P("z^"), ParseError);
  CHECK_THROWS_AS(P("2z"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Poly p = g.poly(12);
    CHECK(Poly::parse(p.to_string()) == p);
  }
}

TEST_CASE("division with remainder") {
  auto check = [](const char* a, const char* b, const char* q, const char* r) {
    const auto dm = poly_divmod(P(a), P(b));
    CHECK(dm.quotient == P(q));
    CHECK(dm.remainder == P(r));
  };
  check("z^2 - 1", "z - 1", "z + 1", "0");
  check("z^3", "z^2 + 1", "z", "-z");
  // (z+1)(z-1)(z^2-1) = z^4 - 2z^2 + 1
  check("z^4", "z^3 - z^2 - z + 1", "z + 1", "2*z^2 - 1");
  CHECK_THROWS_AS(poly_divmod(P("z"), Poly()), DivisionByZero);

  Gen g(5);
  for (int i = 0; i < 300; ++i) {
    const Poly a = g.poly(20);
    Poly b = g.poly(8);
    const auto dm = poly_divmod(a, b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(dm.remainder.degree() < b.degree());
  }
}

TEST_CASE("gcd is monic and divides both") {
  const Poly g = poly_gcd(P("z^3 - z^2 - z + 1"), P("2*z^2 - 2"));
  CHECK(g == P("z^2 - 1"));
  Gen gen(9);
  for (int i = 0; i < 100; ++i) {
    const Poly c = gen.poly(4);
    const Poly a = gen.poly(6) * c;
    const Poly b = gen.poly(6) * c;
    const Poly d = poly_gcd(a, b);
    CHECK(d.lead() == Rational(1));
    CHECK(poly_divmod(a, d).remainder.is_zero());
    CHECK(poly_divmod(b, d).remainder.is_zero());
    CHECK(poly_divmod(d, c.monic()).remainder.is_zero());
  }
}

TEST_CASE("rational functions reduce to a canonical form") {
  const RationalFunction r = RF("z^2 - 1", "2*z^2 - 2*z");
  CHECK(r.num() == P("1/2*z + 1/2"));
  CHECK(r.den() == P("z"));
  CHECK(RF("2*z", "4*z^3") == RF("1", "2*z^2"));
  CHECK(r.eval(Rational(3)) == Rational(BigInt(2), BigInt(3)));
  CHECK_THROWS_AS(RF("1", "0"), DivisionByZero);
  CHECK(RF("z", "z^2 + 1") + RF("1", "z") == RF("2*z^2 + 1", "z^3 + z"));
}

TEST_CASE("expand_f") {
  CHECK(expand_f(0) == RF("z - 1", "z"));
  const RationalFunction f1 = expand_f(1);
  CHECK(f1.num().to_string() == "z^3 - z^2 - z + 1");
  CHECK(f1.den() == Poly::monomial(1, 3));
  const RationalFunction f2 = expand_f(2);
  const int t[] = {1, -1, -1, 1, -1, 1, 1, -1};
  for (int k = 0; k < 8; ++k) CHECK(f2.num().coeff(7 - k) == Rational(t[k]));
}

TEST_CASE("expand_f numerators carry the Thue-Morse signs") {
  for (unsigned ell = 0; ell <= 12; ++ell) {
    const RationalFunction f = expand_f(ell);
    const std::size_t n = std::size_t{1} << (ell + 1);
    REQUIRE(f.num().degree() == static_cast<long>(n - 1));
    REQUIRE(f.den() == Poly::monomial(1, n - 1));
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) ok = ok && f.num().coeff(n - 1 - k) == Rational(tm_by_doubling(k));
    CHECK_MESSAGE(ok, "level ", ell);
  }
}

TEST_CASE("expand_f obeys the one-factor step") {
  for (unsigned ell = 1; ell <= 10; ++ell) {
    const std::size_t e = std::size_t{1} << ell;
    const RationalFunction factor(Poly::monomial(1, e) - Poly(1), Poly::monomial(1, e));
    CHECK(expand_f(ell) == expand_f(ell - 1) * factor);
  }
}

TEST_CASE("expand_g obeys the squaring step") {
  CHECK(expand_g(0) == RF("z - 1", "z^2"));
  const RationalFunction zm1(P("z - 1"));
  for (unsigned ell = 0; ell < 10; ++ell) {
    CHECK(expand_g(ell + 1) == zm1 * expand_g(ell).substitute_power(2));
  }
}

TEST_CASE("expand_gtilde") {
  CHECK(expand_gtilde(-1, -1, 0) == RF("z^2 - z - 1", "z^3"));
  CHECK(expand_gtilde(1, 2, 0) == RF("z^2 + z + 2", "z^3"));
  // u^2 = v is outside the family, even though the product itself exists
  CHECK_THROWS_AS(expand_gtilde(1, 1, 0), std::invalid_argument);
  const RationalFunction g1 = expand_gtilde(-1, -1, 1);
  CHECK(g1.num() == P("z^8 - z^7 - z^6 - z^5 + z^4 + z^3 - z^2 + z + 1"));
  CHECK(g1.den() == Poly::monomial(1, 9));
  CHECK(g1 == RF("z^2 - z - 1", "z^3") * RF("z^6 - z^3 - 1", "z^6"));
  CHECK_THROWS_AS(expand_gtilde(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(expand_gtilde(1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(expand_gtilde(2, 4, 0), std::invalid_argument);
}

TEST_CASE("degree cap") {
  Limits tight;
  tight.max_degree = 1000;
  CHECK_THROWS_AS(expand_f(10, tight), ResourceLimitExceeded);
  CHECK_NOTHROW(expand_f(8, tight));
  CHECK_THROWS_AS(expand_gtilde(-1, -1, 6, tight), ResourceLimitExceeded);
}

TEST_CASE("poly_cf examples") {
  const PolyCF g0 = poly_cf(expand_g(0));
  CHECK(g0.integer_part.is_zero());
  REQUIRE(g0.quotients.size() == 2);
  CHECK(g0.quotients[0] == P("z + 1"));
  CHECK(g0.quotients[1] == P("z - 1"));

  const PolyCF c = poly_cf(RF("z^2 + 1", "z"));
  CHECK(c.integer_part == P("z"));
  REQUIRE(c.quotients.size() == 1);
  CHECK(c.quotients[0] == P("z"));

  const PolyCF g4 = poly_cf(expand_g(4));
  CHECK(g4.quotients.size() == 32);
  for (long d : g4.degrees()) CHECK(d == 1);
}

TEST_CASE("poly_cf and fold are inverse (property)") {
  Gen g(31337);
  for (int i = 0; i < 40; ++i) {
    Poly num = g.poly(40, 5);
    Poly den = g.poly(40, 5);
    const RationalFunction rf(num, den);
    CHECK(fold(poly_cf(rf)) == rf);
  }
  for (unsigned ell = 0; ell <= 6; ++ell) CHECK(fold(poly_cf(expand_g(ell))) == expand_g(ell));
}
