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

#include "tmcf/products3.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmcf {

namespace {

std::size_t pow3(unsigned e) {
  std::size_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 3;
  return r;
}

void check_parameters(long u, long v, unsigned level) {
  if (u == 0 || v == 0) throw std::invalid_argument("alpha/beta table: u and v must be nonzero");
  if (BigInt(u) * u == v) throw std::invalid_argument("alpha/beta table: requires u^2 != v");
  if (level > kMaxAlphaBetaLevel) throw ResourceLimitExceeded("alpha/beta table: level too large");
}

struct Seeds {
  Rational alpha2, alpha3, beta3;
};

Seeds level0_seeds(const Rational& u, const Rational& v) {
  const Rational d = u * u - v;
  return {(u * u * u - Rational(2) * u * v) / d, u * v / d, v * v * v / (d * d)};
}

Seeds higher_seeds(const Rational& u, const Rational& v) {
  const Rational d = u * u - v;
  const Rational u2 = u * u;
  return {(u2 * u - Rational(2) * u * v + u) / d, (u * v - u) / d,
          (u2 * u2 - Rational(3) * u2 * v + v * v * v + u2) / (d * d)};
}

AlphaBetaTable seed_table(long u, long v, unsigned level) {
  const Rational ur(u), vr(v);
  const Seeds s = level == 0 ? level0_seeds(ur, vr) : higher_seeds(ur, vr);
  AlphaBetaTable t;
  t.level = level;
  t.u = u;
  t.v = v;
  t.alpha = {-ur, s.alpha2, s.alpha3};
  t.beta = {Rational(1), ur * ur - vr, s.beta3};
  return t;
}

void collect_vanishing(AlphaBetaTable& t) {
  t.vanishing_beta.clear();
  for (std::size_t j = 0; j < t.beta.size(); ++j) {
    if (t.beta[j].is_zero()) t.vanishing_beta.push_back(j + 1);
  }
}

AlphaBetaTable next_level(const AlphaBetaTable& prev) {
  AlphaBetaTable t = seed_table(prev.u, prev.v, prev.level + 1);
  const std::size_t n = t.full_size();
  t.alpha.reserve(n);
  t.beta.reserve(n);
  const Rational u(prev.u), v(prev.v);
  const Rational d = u * u - v;
  const Rational uv = u * v;
  // 1-based accessors into the level being built
  auto a = [&t](std::size_t j) -> const Rational& { return t.alpha[j - 1]; };
  auto b = [&t](std::size_t j) -> const Rational& { return t.beta[j - 1]; };
  const std::size_t k_end = pow3(t.level) - 1;  // k = 0 .. 3^level - 2
  for (std::size_t k = 0; k < k_end; ++k) {
    if (k + 2 > prev.alpha.size()) {
      t.halted = prev.halted;
      break;
    }
    const std::size_t j4 = 3 * k + 4;
    if (b(j4 - 1).is_zero() || b(j4 - 2).is_zero()) {
      t.halted = VanishingBeta{t.level, b(j4 - 1).is_zero() ? j4 - 1 : j4 - 2};
      break;
    }
    Rational beta4 = prev.beta_at(k + 2) / (b(j4 - 1) * b(j4 - 2));
    Rational beta5 = d - beta4;
    if (beta5.is_zero()) {
      t.alpha.push_back(-u);
      t.beta.push_back(std::move(beta4));
      t.beta.push_back(std::move(beta5));
      t.halted = VanishingBeta{t.level, j4 + 1};
      break;
    }
    Rational alpha5 = u - (prev.alpha_at(k + 2) + uv - a(j4 - 2) * beta4) / beta5;
    Rational alpha6 = u - alpha5;
    Rational beta6 = v - alpha5 * alpha6;
    t.alpha.push_back(-u);
    t.alpha.push_back(std::move(alpha5));
    t.alpha.push_back(std::move(alpha6));
    t.beta.push_back(std::move(beta4));
    t.beta.push_back(std::move(beta5));
    t.beta.push_back(std::move(beta6));
  }
  collect_vanishing(t);
  return t;
}

}  // namespace

std::size_t AlphaBetaTable::full_size() const { return pow3(level + 1); }

std::vector<AlphaBetaTable> alphabeta_tables_up_to(long u, long v, unsigned level) {
  check_parameters(u, v, level);
  std::vector<AlphaBetaTable> out;
  out.reserve(level + 1);
  out.push_back(seed_table(u, v, 0));
  collect_vanishing(out.back());
  while (out.back().level < level) out.push_back(next_level(out.back()));
  return out;
}

AlphaBetaTable alphabeta_table(long u, long v, unsigned level) {
  return std::move(alphabeta_tables_up_to(u, v, level).back());
}

std::vector<SeedDivergence> seed_divergence(long u, long v) {
  check_parameters(u, v, 0);
  const Rational ur(u), vr(v);
  const Seeds lo = level0_seeds(ur, vr);
  const Seeds hi = higher_seeds(ur, vr);
  std::vector<SeedDivergence> out;
  if (lo.alpha2 != hi.alpha2) out.push_back({"alpha_2", lo.alpha2, hi.alpha2});
  if (lo.alpha3 != hi.alpha3) out.push_back({"alpha_3", lo.alpha3, hi.alpha3});
  if (lo.beta3 != hi.beta3) out.push_back({"beta_3", lo.beta3, hi.beta3});
  return out;
}

TM3Report verify_tm3_pattern(const AlphaBetaTable& t) {
  if (t.u != -1 || t.v != -1) {
    throw std::invalid_argument("verify_tm3_pattern: expects the u = v = -1 table");
  }
  TM3Report r;
  r.level = t.level;
  r.table_complete = t.complete();
  const std::size_t n = t.full_size();
  r.exceptional_alpha_first = (n + 1) / 2;
  r.exceptional_alpha_second = (n + 3) / 2;
  const Valuation2 minus_one = Valuation2::finite(-1);
  const Valuation2 zero = Valuation2::finite(0);

  for (std::size_t j = 1; j <= t.alpha.size(); ++j) {
    const Valuation2 nu = nu2(t.alpha_at(j));
    r.alpha_valuations.push_back(nu);
    const bool exceptional = j == r.exceptional_alpha_first || j == r.exceptional_alpha_second;
    if (exceptional && nu != minus_one) {
      r.alpha_mismatches.push_back({'a', j, nu, "-1"});
    } else if (!exceptional && (t.alpha_at(j).is_zero() || nu < zero)) {
      r.alpha_mismatches.push_back({'a', j, nu, "nonzero with nu2 >= 0"});
    }
  }

  r.all_beta_nonzero = r.table_complete && t.vanishing_beta.empty();
  bool literal = true;
  for (std::size_t j = 1; j <= t.beta.size(); ++j) {
    const Valuation2 nu = nu2(t.beta_at(j));
    r.beta_valuations.push_back(nu);
    const bool exception = j == r.exceptional_alpha_second;
    std::int64_t expected = 0;
    if (j == 2) expected = 1;
    if (exception) expected = -2;
    if (nu != Valuation2::finite(expected)) {
      r.beta_mismatches.push_back({'b', j, nu, std::to_string(expected)});
    }
    if (j == 2 && nu != Valuation2::finite(1)) literal = false;
    if ((nu == Valuation2::finite(-2)) != exception) literal = false;
  }
  r.literal_beta_reading_holds = literal && r.table_complete;
  return r;
}

GeneralizedCF build_alphabeta_gcf(const AlphaBetaTable& t) {
  std::vector<GeneralizedCF::Term> terms;
  terms.reserve(t.alpha.size());
  for (std::size_t j = 0; j < t.alpha.size(); ++j) {
    terms.push_back({Poly(t.beta[j]), Poly::linear(1, t.alpha[j])});
  }
  return GeneralizedCF(std::move(terms));
}

GtildeIdentityReport verify_gtilde_identity(const AlphaBetaTable& t, const Limits& limits) {
  GtildeIdentityReport r;
  r.u = t.u;
  r.v = t.v;
  r.level = t.level;
  r.term_count = t.alpha.size();
  if (!t.vanishing_beta.empty()) r.truncated_at = t.vanishing_beta.front();
  if (t.halted) r.truncated_at = r.truncated_at ? std::min(*r.truncated_at, t.halted->index)
                                                : t.halted->index;
  if (!t.complete() || !t.vanishing_beta.empty()) return r;
  r.evaluated = true;
  r.identity_holds = gcf_eval(build_alphabeta_gcf(t)) == expand_gtilde(t.u, t.v, t.level, limits);
  return r;
}

GtildeIdentityReport verify_gtilde_identity(long u, long v, unsigned level, const Limits& limits) {
  return verify_gtilde_identity(alphabeta_table(u, v, level), limits);
}

Rational eval_gtilde_at(unsigned ell, long b) {
  if (b < 2) throw std::invalid_argument("eval_gtilde_at: base must be >= 2");
  if (ell > kMaxAlphaBetaLevel) throw ResourceLimitExceeded("eval_gtilde_at: level too large");
  // each factor is (b^{2e} - b^e - 1) / b^{2e}
  BigInt num = 1;
  BigInt den = 1;
  BigInt power = b;  // b^{3^h}
  for (unsigned h = 0; h <= ell; ++h) {
    const BigInt square = power * power;
    num *= square - power - 1;
    den *= square;
    if (h < ell) power *= square;
  }
  return Rational(num, den);
}

CFStats gtilde_rcf_stats(long b, unsigned ell, const AnalysisConfig& cfg) {
  return cf_stats(b, ell, eval_gtilde_at(ell, b), cfg);
}

}  // namespace tmcf
