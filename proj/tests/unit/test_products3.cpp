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

#include <vector>

#include "doctest.h"
#include "random.hpp"
#include "tmcf/products3.hpp"

using namespace tmcf;
using tmcf::testing::Gen;

namespace {

std::vector<Rational> row(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

std::vector<Valuation2> vals(std::initializer_list<int> xs) {
  std::vector<Valuation2> out;
  for (int x : xs) out.push_back(Valuation2::finite(x));
  return out;
}

std::vector<Rational> head(const std::vector<Rational>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<long>(std::min(n, v.size()))};
}

}  // namespace

TEST_CASE("level-0 table for u = v = -1") {
  const AlphaBetaTable t = alphabeta_table(-1, -1, 0);
  CHECK(t.alpha == row({"1", "-3/2", "1/2"}));
  CHECK(t.beta == row({"1", "2", "-1/4"}));
  CHECK(t.complete());
}

TEST_CASE("level-1 table for u = v = -1") {
  const AlphaBetaTable t = alphabeta_table(-1, -1, 1);
  REQUIRE(t.complete());
  CHECK(t.alpha.size() == 9);
  CHECK(head(t.alpha, 6) == row({"1", "-2", "1", "1", "-5/2", "3/2"}));
  CHECK(head(t.beta, 6) == row({"1", "2", "1", "1", "1", "11/4"}));
}

TEST_CASE("higher levels start from their own seeds") {
  for (unsigned ell = 1; ell <= 4; ++ell) {
    const AlphaBetaTable t = alphabeta_table(-1, -1, ell);
    CHECK(head(t.alpha, 3) == row({"1", "-2", "1"}));
    CHECK(head(t.beta, 3) == row({"1", "2", "1"}));
    CHECK(t.alpha.size() == t.full_size());
  }
}

TEST_CASE("general level-0 table, u = 2, v = 1") {
  const AlphaBetaTable t = alphabeta_table(2, 1, 0);
  CHECK(t.alpha == row({"-2", "4/3", "2/3"}));
  CHECK(t.beta == row({"1", "3", "1/9"}));
  CHECK(verify_gtilde_identity(t).passed());
}

TEST_CASE("level-0 closed forms for random (u, v)") {
  Gen g(20);
  int done = 0;
  while (done < 20) {
    const long u = g.small(-9, 9);
    const long v = g.small(-9, 9);
    if (u == 0 || v == 0 || u * u == v) continue;
    ++done;
    const AlphaBetaTable t = alphabeta_table(u, v, 0);
    const Rational U(u), V(v), d = U * U - V;
    CHECK(t.alpha_at(1) == -U);
    CHECK(t.alpha_at(2) == (U * U * U - Rational(2) * U * V) / d);
    CHECK(t.alpha_at(3) == U * V / d);
    CHECK(t.beta_at(1) == Rational(1));
    CHECK(t.beta_at(2) == d);
    CHECK(t.beta_at(3) == V * V * V / (U * U * U * U - Rational(2) * U * U * V + V * V));
    // and the stacked fraction really is (z^2 + u z + v) / z^3
    CHECK(verify_gtilde_identity(t).passed());
  }
}

TEST_CASE("parameters are validated") {
  CHECK_THROWS_AS(alphabeta_table(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(alphabeta_table(1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(alphabeta_table(3, 9, 0), std::invalid_argument);
  CHECK_THROWS_AS(alphabeta_table(-1, -1, kMaxAlphaBetaLevel + 1), ResourceLimitExceeded);
  CHECK_THROWS_AS(verify_tm3_pattern(alphabeta_table(2, 1, 0)), std::invalid_argument);
}

TEST_CASE("sum rules") {
  for (auto [u, v] : {std::pair{-1L, -1L}, {2L, 1L}, {1L, 2L}, {3L, -2L}}) {
    const auto tables = alphabeta_tables_up_to(u, v, 4);
    for (const auto& t : tables) {
      if (t.level == 0) continue;
      for (std::size_t k = 0; 3 * k + 6 <= t.alpha.size(); ++k) {
        CHECK(t.alpha_at(3 * k + 4) == Rational(-u));
        CHECK(t.alpha_at(3 * k + 5) + t.alpha_at(3 * k + 6) == Rational(u));
        CHECK(t.beta_at(3 * k + 4) + t.beta_at(3 * k + 5) == Rational(u * u - v));
      }
    }
  }
}

TEST_CASE("2-adic pattern for u = v = -1") {
  const TM3Report r0 = verify_tm3_pattern(alphabeta_table(-1, -1, 0));
  CHECK(r0.alpha_valuations == vals({0, -1, -1}));
  CHECK(r0.beta_valuations == vals({0, 1, -2}));
  CHECK(r0.exceptional_alpha_first == 2);
  CHECK(r0.exceptional_alpha_second == 3);
  CHECK(r0.passed());

  const TM3Report r1 = verify_tm3_pattern(alphabeta_table(-1, -1, 1));
  CHECK(r1.exceptional_alpha_first == 5);
  CHECK(r1.exceptional_alpha_second == 6);
  CHECK(r1.all_beta_nonzero);
  CHECK(r1.alpha_valuations == vals({0, 1, 0, 0, -1, -1, 0, 0, 1}));
  CHECK(r1.beta_valuations == vals({0, 1, 0, 0, 0, -2, 0, 0, 0}));
  CHECK(r1.passed());

  const auto tables = alphabeta_tables_up_to(-1, -1, 6);
  for (const auto& t : tables) {
    const TM3Report r = verify_tm3_pattern(t);
    CHECK_MESSAGE(r.passed(), "level ", t.level);
    CHECK(r.literal_beta_reading_holds);
    CHECK(r.beta_valuations.size() == t.full_size());
  }
}

TEST_CASE("the stacked fraction reproduces the ternary product") {
  for (unsigned ell = 0; ell <= 4; ++ell) {
    const GtildeIdentityReport r = verify_gtilde_identity(-1, -1, ell);
    CHECK_MESSAGE(r.passed(), "level ", ell);
  }
  CHECK(verify_gtilde_identity(-1, -1, 1).term_count == 9);
  CHECK(verify_gtilde_identity(-1, -1, 2).term_count == 27);
  for (auto [u, v] : {std::pair{2L, 1L}, {1L, 2L}, {3L, -2L}}) {
    for (unsigned ell = 0; ell <= 1; ++ell) {
      const GtildeIdentityReport r = verify_gtilde_identity(u, v, ell);
      CHECK(r.evaluated);
      CHECK_MESSAGE(r.identity_holds, "u=", u, " v=", v, " level ", ell);
    }
  }
}

TEST_CASE("vanishing betas are data, not errors") {
  // search a small box for a parameter pair whose table truncates
  bool seen = false;
  for (long u = -4; u <= 4 && !seen; ++u) {
    for (long v = -4; v <= 4 && !seen; ++v) {
      if (u == 0 || v == 0 || u * u == v) continue;
      const AlphaBetaTable t = alphabeta_table(u, v, 3);
      if (t.vanishing_beta.empty()) continue;
      seen = true;
      const GtildeIdentityReport r = verify_gtilde_identity(t);
      CHECK_FALSE(r.evaluated);
      REQUIRE(r.truncated_at.has_value());
      CHECK(t.beta_at(*r.truncated_at).is_zero());
    }
  }
  CHECK(seen);
}

TEST_CASE("seed divergence between level 0 and higher levels") {
  const auto d = seed_divergence(-1, -1);
  REQUIRE(d.size() == 3);
  CHECK(d[0].name == "alpha_2");
  CHECK(d[0].level0 == Rational::parse("-3/2"));
  CHECK(d[0].higher == Rational(-2));
  CHECK(d[1].level0 == Rational::parse("1/2"));
  CHECK(d[1].higher == Rational(1));
  CHECK(d[2].level0 == Rational::parse("-1/4"));
  CHECK(d[2].higher == Rational(1));
}

TEST_CASE("regular continued fractions of the ternary values") {
  CHECK(eval_gtilde_at(0, 2) == Rational::parse("1/4"));
  CHECK(eval_gtilde_at(0, 3) == Rational::parse("5/9"));
  CHECK(eval_gtilde_at(1, 2) == Rational::parse("55/256"));
  const CFStats s0 = gtilde_rcf_stats(2, 0);
  CHECK(s0.length == 1);
  CHECK(s0.max_quotient == 4);
  const CFStats s1 = gtilde_rcf_stats(3, 0);
  CHECK(s1.length == 3);
  CHECK(s1.max_quotient == 4);
  const CFStats s2 = gtilde_rcf_stats(2, 1);
  CHECK(s2.length == 6);
  CHECK(s2.max_quotient == 8);
  CHECK(rcf_of_rational(eval_gtilde_at(1, 2)).to_string() == "[0; 4, 1, 1, 1, 8, 2]");
}
