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

#include "tmcf/analysis.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace tmcf {

namespace {

constexpr mpfr_prec_t kPrecision = 256;

// Thin RAII holder; the computations below are short straight-line formulas.
class Real {
 public:
  Real() { mpfr_init2(x_, kPrecision); }
  explicit Real(double d) : Real() { mpfr_set_d(x_, d, MPFR_RNDN); }
  explicit Real(const BigInt& z) : Real() { mpfr_set_z(x_, z.get_mpz_t(), MPFR_RNDN); }
  Real(const Real& o) : Real() { mpfr_set(x_, o.x_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(x_, o.x_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

  friend Real operator+(const Real& a, const Real& b) { return apply(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return apply(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return apply(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return apply(mpfr_div, a, b); }

  // Rounded to 15 significant digits through the decimal string, so the
  // result is exactly what a CSV reader would parse back.
  double rounded() const {
    std::array<char, 64> buf{};
    mpfr_snprintf(buf.data(), buf.size(), "%.14Re", x_);
    return std::strtod(buf.data(), nullptr);
  }

 private:
  template <typename Op>
  static Real apply(Op op, const Real& a, const Real& b) {
    Real r;
    op(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  mpfr_t x_;
};

Real log_of(const BigInt& z) {
  Real r(z);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real log_of(const Real& x) {
  Real r(x);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt_of(const Real& x) {
  Real r(x);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

// log(1/(q^2 |x - p/q|)) / (log b sqrt(log q log log q)) at full precision.
std::optional<Real> k_statistic_real(const Rational& x, const BigInt& p, const BigInt& q, long b) {
  if (q <= 2) return std::nullopt;  // log log q <= 0
  BigInt gap = x.num_ref() * q - p * x.den_ref();
  if (gap == 0) return std::nullopt;
  gap = abs(gap);
  const Real log_q = log_of(q);
  const Real numerator = log_of(x.den_ref()) - log_q - log_of(gap);
  const Real denominator = log_of(BigInt(b)) * sqrt_of(log_q * log_of(log_q));
  return numerator / denominator;
}

}  // namespace

Rational eval_f_at(unsigned ell, long b) {
  if (b < 2) throw std::invalid_argument("eval_f_at: base must be >= 2");
  BigInt num = 1;
  BigInt power = b;  // b^{2^h}
  for (unsigned h = 0; h <= ell; ++h) {
    num *= power - 1;
    if (h < ell) power *= power;
  }
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(b), (2UL << ell) - 1);
  return Rational(num, den);
}

double round15(double x) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.14e", x);
  return std::strtod(buf.data(), nullptr);
}

std::string format_decimal(std::optional<double> x) {
  if (!x) return "NA";
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.15g", *x);
  return buf.data();
}

std::optional<double> k_statistic(const Rational& x, const BigInt& p, const BigInt& q, long b) {
  auto k = k_statistic_real(x, p, q, b);
  if (!k) return std::nullopt;
  return k->rounded();
}

CFStats cf_stats(long b, unsigned ell, const Rational& x, const AnalysisConfig& cfg) {
  if (b < 2) throw std::invalid_argument("cf_stats: base must be >= 2");
  CFStats s;
  s.b = b;
  s.ell = ell;
  const RegularCF cf = rcf_of_rational(x);
  s.length = cf.length();
  s.max_quotient = cf.max_quotient();

  const ConvergentTable t = convergents(cf);
  s.classical_bound_holds = true;
  std::optional<Real> best;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    // |x - p/q| < 1/q^2  <=>  |P q - p Q| * q < Q
    const BigInt gap = abs(x.num_ref() * t.q[k] - t.p[k] * x.den_ref());
    if (!(gap * t.q[k] < x.den_ref())) s.classical_bound_holds = false;
    if (t.q[k] <= cfg.k_cutoff) continue;
    auto stat = k_statistic_real(x, t.p[k], t.q[k], b);
    if (!stat) continue;
    ++s.eligible_convergents;
    if (!best || mpfr_greater_p(stat->get(), best->get())) best = std::move(stat);
  }

  if (ell >= 2) {
    if (best) s.measured_K = best->rounded();
    const Real sqrt_ell = sqrt_of(Real(static_cast<double>(ell)));
    Real two_pow;
    mpfr_ui_pow_ui(two_pow.get(), 2, ell, MPFR_RNDN);
    const Real half_power = sqrt_of(two_pow);  // 2^{ell/2}
    s.measured_C = (Real(BigInt(static_cast<unsigned long>(s.length))) * sqrt_ell / half_power).rounded();
    const Real log_b = log_of(BigInt(b));
    const Real log_log_3b = log_of(log_of(BigInt(3 * b)));
    const Real exponent = log_of(s.max_quotient) / log_b;
    s.normalized_exponent = (exponent / (sqrt_ell * half_power * sqrt_of(log_b * log_log_3b))).rounded();
  }
  return s;
}

CFStats partial_quotient_stats(long b, unsigned ell, const AnalysisConfig& cfg) {
  return cf_stats(b, ell, eval_f_at(ell, b), cfg);
}

std::vector<CFStats> measure_K_sweep(std::span<const long> bases, std::span<const unsigned> levels,
                                     const AnalysisConfig& cfg) {
  std::vector<long> bs(bases.begin(), bases.end());
  std::vector<unsigned> ls(levels.begin(), levels.end());
  std::sort(bs.begin(), bs.end());
  std::sort(ls.begin(), ls.end());
  std::vector<CFStats> rows;
  rows.reserve(bs.size() * ls.size());
  for (const long b : bs) {
    for (const unsigned ell : ls) rows.push_back(partial_quotient_stats(b, ell, cfg));
  }
  return rows;
}

SweepSummary summarize_sweep(std::span<const CFStats> rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    if (r.ell < 2) continue;
    if (!r.measured_K || !std::isfinite(*r.measured_K)) {
      s.all_K_finite = false;
    } else if (!s.sup_measured_K || *r.measured_K > *s.sup_measured_K) {
      s.sup_measured_K = r.measured_K;
      s.sup_b = r.b;
      s.sup_ell = r.ell;
    }
    if (r.measured_C && (!s.min_measured_C || *r.measured_C < *s.min_measured_C)) {
      s.min_measured_C = r.measured_C;
    }
    if (r.normalized_exponent &&
        (!s.max_normalized_exponent || *r.normalized_exponent > *s.max_normalized_exponent)) {
      s.max_normalized_exponent = r.normalized_exponent;
    }
  }
  return s;
}

std::string stats_csv(std::span<const CFStats> rows) {
  std::string out = "b,ell,length,max_quotient,measured_K,measured_C,normalized_exponent\n";
  for (const auto& r : rows) {
    out += std::to_string(r.b) + "," + std::to_string(r.ell) + "," + std::to_string(r.length) + "," +
           r.max_quotient.get_str() + "," + format_decimal(r.measured_K) + "," +
           format_decimal(r.measured_C) + "," + format_decimal(r.normalized_exponent) + "\n";
  }
  return out;
}

PrefixReport prefix_agreement(long b, unsigned ell, unsigned m) {
  if (b < 2) throw std::invalid_argument("prefix_agreement: base must be >= 2");
  PrefixReport r;
  r.b = b;
  r.ell = ell;
  r.m = m;
  const RegularCF base = rcf_of_rational(eval_f_at(ell, b));
  const RegularCF longer = m == 0 ? base : rcf_of_rational(eval_f_at(ell + m, b));

  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(b), 1UL << ell);
  const ConvergentTable t = convergents(longer);
  for (std::size_t k = 0; k < t.size() && t.q[k] <= bound; ++k) r.n = k;
  r.required = r.n > 7 ? r.n - 7 : 0;

  const std::size_t limit = std::min(base.length(), longer.length());
  while (r.common_prefix < limit && base.quotients[r.common_prefix] == longer.quotients[r.common_prefix]) {
    ++r.common_prefix;
  }
  if (r.common_prefix < std::max(base.length(), longer.length())) {
    r.divergence_index = r.common_prefix + 1;
  }
  return r;
}

double log_max_abs(std::span<const BigInt> coeffs) {
  BigInt m = 0;
  for (const auto& c : coeffs) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  if (m == 0) throw std::domain_error("log_max_abs: all coefficients are zero");
  return log_of(m).rounded();
}

std::pair<std::vector<BigInt>, std::vector<BigInt>> primitive_pair(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw DivisionByZero("primitive_pair: zero denominator");
  BigInt l = 1;
  for (const auto* poly : {&p, &q}) {
    for (const auto& c : poly->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  }
  std::vector<BigInt> pi, qi;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    pi.push_back(c.num() * (l / c.den_ref()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pi.back().get_mpz_t());
  }
  for (const auto& c : q.coeffs()) {
    qi.push_back(c.num() * (l / c.den_ref()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), qi.back().get_mpz_t());
  }
  if (sgn(qi.back()) < 0) g = -g;
  for (auto& c : pi) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  for (auto& c : qi) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {std::move(pi), std::move(qi)};
}

std::vector<GrowthRecord> convergent_growth(unsigned ell, std::size_t k_max, const Limits& limits,
                                            const ConvergentObserver& observer) {
  const std::size_t count = std::size_t{2} << ell;
  if (k_max > count) {
    throw std::invalid_argument("convergent_growth: k_max " + std::to_string(k_max) + " exceeds " +
                                std::to_string(count) + " partial quotients");
  }
  const PolyCF cf = poly_cf(expand_g(ell, limits));
  std::vector<GrowthRecord> rows;
  rows.reserve(k_max);
  // p_{-1} = 1, q_{-1} = 0, p_0 = a_0, q_0 = 1
  PolyConvergent prev{Poly(Rational(1)), Poly()};
  PolyConvergent cur{cf.integer_part, Poly(Rational(1))};
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Poly& a = cf.quotients[k - 1];
    PolyConvergent next{a * cur.p + prev.p, a * cur.q + prev.q};
    prev = std::move(cur);
    cur = std::move(next);
    const auto [pi, qi] = primitive_pair(cur.p, cur.q);
    rows.push_back({k, log_max_abs(pi), log_max_abs(qi)});
    if (observer) observer(k, cur);
  }
  return rows;
}

std::string growth_csv(unsigned ell, std::span<const GrowthRecord> rows) {
  std::string out = "ell,k,log_num_coeff,log_den_coeff\n";
  for (const auto& r : rows) {
    out += std::to_string(ell) + "," + std::to_string(r.k) + "," + format_decimal(r.log_num_coeff) +
           "," + format_decimal(r.log_den_coeff) + "\n";
  }
  return out;
}

GrowthEnvelope fit_growth_envelope(std::span<const GrowthRecord> rows, std::size_t fit_upto) {
  GrowthEnvelope best;
  best.fit_upto = fit_upto;
  if (rows.empty()) return best;
  const double k_last = static_cast<double>(rows.back().k);
  double best_end = 0;
  bool have = false;
  for (const double c1 : {2.0, std::exp(1.0), 4.0, 8.0}) {
    double c2 = 0;
    for (const auto& r : rows) {
      if (r.k > fit_upto) break;
      const double k = static_cast<double>(r.k);
      const double y = std::max(r.log_num_coeff, r.log_den_coeff);
      c2 = std::max(c2, y / (k * std::log(c1 * k)));
    }
    const double end = c2 * k_last * std::log(c1 * k_last);
    if (!have || end < best_end) {
      have = true;
      best_end = end;
      best.c1 = c1;
      best.c2 = c2;
    }
  }
  for (const auto& r : rows) {
    const double k = static_cast<double>(r.k);
    const double bound = best.c2 * k * std::log(best.c1 * k);
    const double y = std::max(r.log_num_coeff, r.log_den_coeff);
    if (y > bound * (1 + 1e-12)) best.violations.push_back(r.k);
    best.sqrt_rate = std::max(best.sqrt_rate, y / std::sqrt(k));
  }
  return best;
}

}  // namespace tmcf
