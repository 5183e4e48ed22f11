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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "tmcf/analysis.hpp"

using namespace tmcf;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// Same statistic in long double, straight from the definition.
long double k_oracle(long double x, long double p, long double qd, long b) {
  const long double gap = std::fabs(x - p / qd);
  return std::log(1.0L / (qd * qd * gap)) / (std::log(static_cast<long double>(b)) *
                                             std::sqrt(std::log(qd) * std::log(std::log(qd))));
}

BigInt pow_int(long b, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

}  // namespace

TEST_CASE("exact values") {
  CHECK(eval_f_at(1, 2) == q("3/8"));
  CHECK(eval_f_at(2, 2) == q("45/128"));
  const Rational x = eval_f_at(2, 3);
  CHECK(x == q("1280/2187"));
  CHECK(x.den() == pow_int(3, 7));
  CHECK(eval_f_at(3, 2) == q("11475/32768"));
  CHECK_THROWS_AS(eval_f_at(1, 1), std::invalid_argument);
}

TEST_CASE("denominators divide b^{2^{l+1}-1}") {
  for (long b = 2; b <= 10; ++b) {
    for (unsigned ell = 0; ell <= 14; ++ell) {
      const BigInt d = eval_f_at(ell, b).den();
      const BigInt full = pow_int(b, (2UL << ell) - 1);
      CHECK_MESSAGE(full % d == 0, "b=", b, " l=", ell);
    }
  }
}

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(std::nullopt) == "NA");
  CHECK(format_decimal(0.0) == "0");
  CHECK(format_decimal(round15(2.0 / 3.0)) == "0.666666666666667");
  CHECK(round15(1.0 / 3.0) == 0.333333333333333);
  CHECK(format_decimal(round15(123456.789)) == "123456.789");
}

TEST_CASE("small-level statistics") {
  const CFStats s2 = partial_quotient_stats(2, 2);
  CHECK(s2.length == 5);
  CHECK(s2.max_quotient == 5);
  CHECK(s2.measured_C.has_value());
  CHECK(s2.eligible_convergents == 2);  // q = 17, 37
  REQUIRE(s2.measured_K.has_value());
  const long double x2 = 45.0L / 128.0L;
  CHECK(*s2.measured_K ==
        doctest::Approx(static_cast<double>(std::max(k_oracle(x2, 6, 17, 2), k_oracle(x2, 13, 37, 2))))
            .epsilon(1e-12));

  const CFStats s1 = partial_quotient_stats(2, 1);
  CHECK(s1.length == 3);
  CHECK(s1.max_quotient == 2);
  CHECK_FALSE(s1.measured_K.has_value());
  CHECK_FALSE(s1.measured_C.has_value());
  CHECK_FALSE(s1.normalized_exponent.has_value());

  CHECK(stats_csv(std::vector{s2}) ==
        "b,ell,length,max_quotient,measured_K,measured_C,normalized_exponent\n2,2,5,5," + format_decimal(s2.measured_K) + "," +
            format_decimal(s2.measured_C) + "," + format_decimal(s2.normalized_exponent) + "\n");
}

TEST_CASE("measured constants against a long double oracle") {
  // f_3(2) = 11475/32768; convergents with q > 16, short of the last one
  const long double x = 11475.0L / 32768.0L;
  const std::pair<long, long> conv[] = {{6, 17}, {7, 20}, {90, 257}, {187, 534}, {277, 791}, {1018, 2907}};
  long double best = 0;
  for (auto [p, qd] : conv) best = std::max(best, k_oracle(x, p, qd, 2));
  const CFStats s = partial_quotient_stats(2, 3);
  REQUIRE(s.measured_K.has_value());
  CHECK(s.eligible_convergents == 6);
  CHECK(*s.measured_K == doctest::Approx(static_cast<double>(best)).epsilon(1e-12));
  CHECK(*s.measured_K == doctest::Approx(2.0540).epsilon(1e-4));

  const double c = 9 * std::sqrt(3.0) / std::pow(2.0, 1.5);
  CHECK(*s.measured_C == doctest::Approx(c).epsilon(1e-13));
  const double e = (std::log(12.0) / std::log(2.0)) /
                   (std::sqrt(3.0) * std::pow(2.0, 1.5) * std::sqrt(std::log(2.0) * std::log(std::log(6.0))));
  CHECK(*s.normalized_exponent == doctest::Approx(e).epsilon(1e-13));
  CHECK(s.classical_bound_holds);
}

TEST_CASE("the K statistic") {
  const Rational x = q("11475/32768");
  CHECK(*k_statistic(x, 7, 20, 2) == doctest::Approx(2.0540).epsilon(1e-4));
  CHECK_FALSE(k_statistic(x, 11475, 32768, 2).has_value());
  CHECK_FALSE(k_statistic(x, 0, 1, 2).has_value());
  CHECK_FALSE(k_statistic(x, 1, 2, 2).has_value());
}

TEST_CASE("K cutoff is configurable") {
  AnalysisConfig cfg;
  cfg.k_cutoff = 300;
  const CFStats s = partial_quotient_stats(2, 3, cfg);
  CHECK(s.eligible_convergents == 3);
}

TEST_CASE("sweep over a small grid") {
  const long bases[] = {10, 2, 3};
  const unsigned levels[] = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto rows = measure_K_sweep(bases, levels);
  REQUIRE(rows.size() == 27);
  CHECK(rows.front().b == 2);
  CHECK(rows.back().b == 10);
  for (const auto& r : rows) {
    CHECK(r.classical_bound_holds);
    BigInt den = eval_f_at(r.ell, r.b).den();
    CHECK(r.max_quotient <= den);
    if (r.ell >= 4) {
      REQUIRE(r.measured_K.has_value());
      CHECK(std::isfinite(*r.measured_K));
      CHECK(*r.measured_K > 0);
    }
  }
  const SweepSummary sum = summarize_sweep(rows);
  REQUIRE(sum.sup_measured_K.has_value());
  REQUIRE(sum.min_measured_C.has_value());
  CHECK(*sum.min_measured_C > 0);
}

TEST_CASE("prefix agreement") {
  const PrefixReport same = prefix_agreement(2, 5, 0);
  CHECK(same.passed());
  CHECK_FALSE(same.divergence_index.has_value());
  CHECK(same.common_prefix == rcf_of_rational(eval_f_at(5, 2)).length());

  const PrefixReport r = prefix_agreement(2, 2, 1);
  CHECK(r.passed());
  CHECK(r.required == (r.n > 7 ? r.n - 7 : 0));

  const PrefixReport big = prefix_agreement(2, 8, 4);
  CHECK(big.passed());
  CHECK(big.common_prefix >= big.required);
  CHECK(big.divergence_index.has_value());

  for (long b = 2; b <= 10; ++b) {
    for (unsigned ell = 2; ell <= 7; ++ell) {
      for (unsigned m = 1; m <= 2; ++m) CHECK_MESSAGE(prefix_agreement(b, ell, m).passed(), b, ",", ell, ",", m);
    }
  }
}

TEST_CASE("convergent growth") {
  std::vector<PolyConvergent> seen;
  const auto rows = convergent_growth(4, 32, {}, [&](std::size_t, const PolyConvergent& c) { seen.push_back(c); });
  REQUIRE(rows.size() == 32);
  CHECK(rows[0].k == 1);
  CHECK(rows[0].log_num_coeff == 0);
  CHECK(rows[0].log_den_coeff == 0);
  CHECK(seen[0].p == Poly(1));
  CHECK(seen[0].q == Poly::parse("z + 1"));

  // k-th convergent == fold of the first k partial quotients
  const PolyCF cf = poly_cf(expand_g(4));
  for (std::size_t k = 1; k <= 32; ++k) {
    PolyCF prefix{cf.integer_part, {cf.quotients.begin(), cf.quotients.begin() + static_cast<long>(k)}};
    CHECK(RationalFunction(seen[k - 1].p, seen[k - 1].q) == fold(prefix));
  }
  // the last convergent is g_4 itself
  CHECK(RationalFunction(seen.back().p, seen.back().q) == expand_g(4));
  CHECK(rows.back().log_num_coeff == 0);

  CHECK_THROWS_AS(convergent_growth(4, 33), std::invalid_argument);
  const std::string csv = growth_csv(4, rows);
  CHECK(csv.rfind("ell,k,log_num_coeff,log_den_coeff\n4,1,0,0\n", 0) == 0);
}

TEST_CASE("primitive integer form") {
  const auto [p, qq] = primitive_pair(Poly::parse("1/2*z + 1"), Poly::parse("-3/4*z^2"));
  CHECK(p == std::vector<BigInt>{-4, -2});
  CHECK(qq == std::vector<BigInt>{0, 0, 3});
  CHECK(log_max_abs(qq) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("growth envelope") {
  const auto rows = convergent_growth(7, 256);
  const GrowthEnvelope env = fit_growth_envelope(rows, 128);
  CHECK(env.c2 > 0);
  CHECK(env.violations.empty());
  std::vector<GrowthRecord> spiky(rows.begin(), rows.end());
  spiky[200].log_num_coeff = 1e6;
  CHECK_FALSE(fit_growth_envelope(spiky, 128).violations.empty());
}
