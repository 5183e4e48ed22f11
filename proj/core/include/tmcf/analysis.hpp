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

// Numerical experiments on the rationals f_l(b) = prod_{h<=l} (1 - b^{-2^h}).
//
// Every decimal here is derived from exact integers with 256-bit MPFR
// logarithms and then rounded to nearest at 15 significant digits, so CSV
// output is reproducible bit for bit.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmcf/arith.hpp"
#include "tmcf/contfrac.hpp"
#include "tmcf/polynomial.hpp"

namespace tmcf {

struct AnalysisConfig {
  static constexpr unsigned long kDefaultKCutoff = 16;
  // Convergents with q <= k_cutoff are left out of the K statistic.
  unsigned long k_cutoff = kDefaultKCutoff;
};

// prod_{h=0}^{l} (1 - b^{-2^h}), exactly. b >= 2.
Rational eval_f_at(unsigned ell, long b);

// Round to nearest, 15 significant digits.
double round15(double x);
// "%.15g" of an already rounded value; "NA" for nullopt.
std::string format_decimal(std::optional<double> x);

// log(1/(q^2 |x - p/q|)) / (log b * sqrt(log q * log log q)); nullopt when
// p/q == x or q <= 2 (where log log q <= 0).
std::optional<double> k_statistic(const Rational& x, const BigInt& p, const BigInt& q, long b);

struct CFStats {
  long b = 0;
  unsigned ell = 0;
  std::size_t length = 0;
  BigInt max_quotient;
  // Empirical lower-bound witness for the approximation constant, not the
  // constant itself. NA for ell < 2 or when no convergent is eligible.
  std::optional<double> measured_K;
  // L * sqrt(ell) / 2^{ell/2}; NA for ell < 2.
  std::optional<double> measured_C;
  // log_b(max quotient) / (sqrt(ell) 2^{ell/2} sqrt(log b log log 3b)); NA for ell < 2.
  std::optional<double> normalized_exponent;
  std::size_t eligible_convergents = 0;
  // |x - p_k/q_k| < 1/q_k^2 for every convergent short of x itself.
  bool classical_bound_holds = false;
};

// Statistics for the regular continued fraction of an arbitrary rational x
// attached to the pair (b, ell).
CFStats cf_stats(long b, unsigned ell, const Rational& x, const AnalysisConfig& cfg = {});
CFStats partial_quotient_stats(long b, unsigned ell, const AnalysisConfig& cfg = {});

// Grid in (b, ell) order.
std::vector<CFStats> measure_K_sweep(std::span<const long> bases, std::span<const unsigned> levels,
                                     const AnalysisConfig& cfg = {});

struct SweepSummary {
  std::optional<double> sup_measured_K;
  long sup_b = 0;
  unsigned sup_ell = 0;
  std::optional<double> min_measured_C;
  std::optional<double> max_normalized_exponent;
  bool all_K_finite = true;
};
SweepSummary summarize_sweep(std::span<const CFStats> rows);

// header: b,ell,length,max_quotient,measured_K,measured_C,normalized_exponent
std::string stats_csv(std::span<const CFStats> rows);

struct PrefixReport {
  long b = 0;
  unsigned ell = 0;
  unsigned m = 0;
  // Largest convergent index of f_{ell+m}(b) with q_n <= b^{2^ell}.
  std::size_t n = 0;
  // max(0, n - 7)
  std::size_t required = 0;
  std::size_t common_prefix = 0;
  // 1-based index of the first differing partial quotient, if any.
  std::optional<std::size_t> divergence_index;

  bool passed() const { return common_prefix >= required; }
};

PrefixReport prefix_agreement(long b, unsigned ell, unsigned m);

struct GrowthRecord {
  std::size_t k = 0;
  double log_num_coeff = 0;
  double log_den_coeff = 0;
};

struct PolyConvergent {
  Poly p;
  Poly q;
};

// Called once per k with the k-th convergent from the three-term recurrence.
using ConvergentObserver = std::function<void(std::size_t k, const PolyConvergent&)>;

// Convergents of the polynomial continued fraction of g_l(z), k = 1..k_max,
// with log max |coefficient| of the primitive integer form of p_k and q_k.
std::vector<GrowthRecord> convergent_growth(unsigned ell, std::size_t k_max, const Limits& limits = {},
                                            const ConvergentObserver& observer = {});

// Natural log of max |c| over the coefficients.
double log_max_abs(std::span<const BigInt> coeffs);
// Scales p and q by one common rational so all coefficients are integers
// with joint gcd 1 and q has a positive leading coefficient.
std::pair<std::vector<BigInt>, std::vector<BigInt>> primitive_pair(const Poly& p, const Poly& q);

// header: ell,k,log_num_coeff,log_den_coeff
std::string growth_csv(unsigned ell, std::span<const GrowthRecord> rows);

// y_k <= c2 * k * log(c1 * k), fitted on k <= fit_upto and checked on all
// records; c1 is picked from a small grid to make the bound tightest at the
// last k. sqrt_rate is max y_k / sqrt(k), the c3 of a c3^{sqrt k} shape.
struct GrowthEnvelope {
  double c1 = 0;
  double c2 = 0;
  double sqrt_rate = 0;
  std::size_t fit_upto = 0;
  std::vector<std::size_t> violations;  // k values above the envelope
};
GrowthEnvelope fit_growth_envelope(std::span<const GrowthRecord> rows, std::size_t fit_upto);

}  // namespace tmcf
