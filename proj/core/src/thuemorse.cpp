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

#include "tmcf/thuemorse.hpp"

#include <algorithm>
#include <bit>

namespace tmcf {

int thue_morse_sign(std::uint64_t k) { return (std::popcount(k) % 2 == 0) ? 1 : -1; }

PropositionViolated::PropositionViolated(unsigned level, std::size_t index)
    : std::runtime_error("proposition violated at (level " + std::to_string(level) + ", j " +
                         std::to_string(index) + "): v-entry is zero"),
      level_(level),
      index_(index) {}

VTable next_v_table(const VTable& previous) {
  const unsigned level = previous.level + 1;
  if (level > kMaxVLevel) throw ResourceLimitExceeded("v_table: level too large");
  const std::size_t half = std::size_t{1} << level;
  if (previous.values.size() != half) throw std::invalid_argument("next_v_table: malformed previous level");
  VTable t{level, {}};
  auto& v = t.values;
  v.reserve(2 * half);
  v.emplace_back(1);
  v.emplace_back(2);
  for (std::size_t j = 1; j < half; ++j) {
    if (v[2 * j - 1].is_zero()) throw PropositionViolated(level, 2 * j - 1);
    Rational even = -previous.values[j] / v[2 * j - 1];
    Rational odd = Rational(j % 2 == 0 ? 2 : 0) - even;
    v.push_back(std::move(even));
    v.push_back(std::move(odd));
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) throw PropositionViolated(level, j);
  }
  return t;
}

VTable v_table(unsigned level) {
  if (level > kMaxVLevel) throw ResourceLimitExceeded("v_table: level too large");
  VTable t{0, {Rational(1), Rational(1)}};
  while (t.level < level) t = next_v_table(t);
  return t;
}

std::vector<VTable> v_tables_up_to(unsigned max_level) {
  if (max_level > kMaxVLevel) throw ResourceLimitExceeded("v_table: level too large");
  std::vector<VTable> out;
  out.reserve(max_level + 1);
  out.push_back(VTable{0, {Rational(1), Rational(1)}});
  while (out.back().level < max_level) out.push_back(next_v_table(out.back()));
  return out;
}

std::int64_t expected_v_valuation(unsigned level, std::size_t j) {
  if (level == 0) return 0;
  const std::size_t mid = std::size_t{1} << level;
  if (j == 1) return 1;
  if (j == mid || j == mid + 1) return -1;
  return 0;
}

ValuationReport verify_valuation_pattern(const VTable& t) {
  ValuationReport r;
  r.level = t.level;
  r.observed.reserve(t.values.size());
  for (std::size_t j = 0; j < t.values.size(); ++j) {
    Valuation2 observed = nu2(t.values[j]);
    const std::int64_t expected = expected_v_valuation(t.level, j);
    if (observed != Valuation2::finite(expected)) r.mismatches.push_back({j, observed, expected});
    r.observed.push_back(observed);
  }
  return r;
}

GeneralizedCF build_tm_gcf(const VTable& t) {
  const Poly z_plus = Poly::linear(1, 1);
  const Poly z_minus = Poly::linear(1, -1);
  std::vector<GeneralizedCF::Term> terms;
  terms.reserve(t.values.size());
  for (std::size_t j = 0; j < t.values.size(); ++j) {
    terms.push_back({Poly(t.values[j]), j % 2 == 0 ? z_plus : z_minus});
  }
  return GeneralizedCF(std::move(terms));
}

GeneralizedCF build_tm_gcf(unsigned level) { return build_tm_gcf(v_table(level)); }

namespace {

std::string describe_divergence(const RationalFunction& got, const RationalFunction& want) {
  const auto first_diff = [](const Poly& a, const Poly& b, const char* which) -> std::string {
    const std::size_t n = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeff(i) != b.coeff(i)) {
        return std::string(which) + " coefficient of z^" + std::to_string(i) + ": got " +
               a.coeff(i).to_string() + ", expected " + b.coeff(i).to_string();
      }
    }
    return {};
  };
  std::string s = first_diff(got.den(), want.den(), "denominator");
  if (s.empty()) s = first_diff(got.num(), want.num(), "numerator");
  return s;
}

}  // namespace

FzfracReport verify_fzfrac(const VTable& t, const Limits& limits) {
  FzfracReport r;
  r.level = t.level;
  r.expected_quotient_count = t.values.size();
  const RationalFunction g = expand_g(t.level, limits);
  const RationalFunction evaluated = gcf_eval(build_tm_gcf(t));
  r.identity_holds = evaluated == g;
  if (!r.identity_holds) r.first_divergence = describe_divergence(evaluated, g);

  const PolyCF cf = poly_cf(g);
  r.quotient_count = cf.quotients.size();
  r.all_degree_one = cf.integer_part.is_zero();
  r.leading_coefficients.reserve(cf.quotients.size());
  for (const auto& q : cf.quotients) {
    if (q.degree() != 1) r.all_degree_one = false;
    r.leading_coefficients.push_back(q.is_zero() ? Rational() : q.lead());
  }
  return r;
}

FzfracReport verify_fzfrac(unsigned level, const Limits& limits) {
  return verify_fzfrac(v_table(level), limits);
}

bool verify_substitution(const VTable& next, const Limits& limits) {
  if (next.level == 0) throw std::invalid_argument("verify_substitution: needs level >= 1");
  const RationalFunction lhs = gcf_eval(build_tm_gcf(next));
  const RationalFunction rhs =
      RationalFunction(Poly::linear(1, -1)) * expand_g(next.level - 1, limits).substitute_power(2);
  return lhs == rhs;
}

ContractionReport verify_contraction(const VTable& previous, const VTable& t, const Limits& limits) {
  if (t.level == 0 || previous.level + 1 != t.level) {
    throw std::invalid_argument("verify_contraction: expected consecutive levels with t.level >= 1");
  }
  ContractionReport r;
  r.level = t.level;
  const GeneralizedCF g = build_tm_gcf(t);
  const GeneralizedCF contracted = even_contraction(g);
  const RationalFunction value = gcf_eval(contracted);
  r.sound = value == gcf_eval(g);
  r.matches_substitution =
      value == RationalFunction(Poly::linear(1, -1)) *
                   expand_g(previous.level, limits).substitute_power(2);

  const Poly z2_plus({Rational(1), Rational(0), Rational(1)});
  const Poly z2_minus({Rational(-1), Rational(0), Rational(1)});
  std::vector<GeneralizedCF::Term> expected;
  expected.reserve(previous.values.size());
  expected.push_back({Poly::linear(1, -1), z2_plus});
  for (std::size_t j = 1; j < previous.values.size(); ++j) {
    expected.push_back({Poly(previous.values[j]), j % 2 == 0 ? z2_plus : z2_minus});
  }
  r.matches_previous_level = contracted == GeneralizedCF(std::move(expected));
  return r;
}

}  // namespace tmcf
