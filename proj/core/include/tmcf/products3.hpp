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

// Continued fractions of the ternary products
//   (1/z) prod_{h=0}^{l} (1 + u z^{-3^h} + v z^{-2*3^h}).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmcf/analysis.hpp"
#include "tmcf/arith.hpp"
#include "tmcf/contfrac.hpp"
#include "tmcf/polynomial.hpp"

namespace tmcf {

inline constexpr unsigned kMaxAlphaBetaLevel = 18;

struct VanishingBeta {
  unsigned level;
  std::size_t index;  // 1-based
};

// alpha_1..alpha_N and beta_1..beta_N, N = 3^{level+1}, stored 0-based
// (alpha[j-1] is alpha_j). When a beta needed as a divisor vanishes the
// recurrence stops; `halted` records where and the sequences are truncated.
struct AlphaBetaTable {
  unsigned level = 0;
  long u = 0;
  long v = 0;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  // Every zero beta at this level (1-based), including ones never divided by.
  std::vector<std::size_t> vanishing_beta;
  std::optional<VanishingBeta> halted;

  std::size_t full_size() const;
  bool complete() const { return !halted && alpha.size() == full_size(); }
  const Rational& alpha_at(std::size_t j) const { return alpha.at(j - 1); }
  const Rational& beta_at(std::size_t j) const { return beta.at(j - 1); }
};

// Levels 0..level; level k >= 1 is built from level k-1. Requires u, v
// nonzero and u^2 != v. A halted level halts every level above it.
std::vector<AlphaBetaTable> alphabeta_tables_up_to(long u, long v, unsigned level);
AlphaBetaTable alphabeta_table(long u, long v, unsigned level);

// The level-0 and level>=1 seed formulas for alpha_2, alpha_3, beta_3 are
// different; this lists which seeds differ for a given (u, v).
struct SeedDivergence {
  std::string name;
  Rational level0;
  Rational higher;
};
std::vector<SeedDivergence> seed_divergence(long u, long v);

struct TM3Mismatch {
  char sequence;  // 'a' or 'b'
  std::size_t index;
  Valuation2 observed;
  std::string expected;
};

struct TM3Report {
  unsigned level = 0;
  std::vector<Valuation2> alpha_valuations;
  std::vector<Valuation2> beta_valuations;
  std::size_t exceptional_alpha_first = 0;  // (3^{l+1}+1)/2
  std::size_t exceptional_alpha_second = 0;  // (3^{l+1}+3)/2, also the beta exception
  // alpha_j: nu2 = -1 exactly at the two exceptional indices, elsewhere
  // alpha_j != 0 and nu2 >= 0.
  std::vector<TM3Mismatch> alpha_mismatches;
  // Intended beta reading: nu2(beta_2) = 1, nu2 = -2 exactly at the
  // exception, nu2(beta_j) = 0 otherwise.
  std::vector<TM3Mismatch> beta_mismatches;
  // Literal beta reading ends with "nu2(beta_2) = 0 otherwise", which
  // contradicts nu2(beta_2) = 1; only its first two clauses are checkable.
  bool literal_beta_reading_holds = false;
  bool all_beta_nonzero = false;
  bool table_complete = false;

  bool passed() const {
    return table_complete && all_beta_nonzero && alpha_mismatches.empty() && beta_mismatches.empty();
  }
};

// Expects a table built with u = v = -1.
TM3Report verify_tm3_pattern(const AlphaBetaTable& t);

struct GtildeIdentityReport {
  long u = 0;
  long v = 0;
  unsigned level = 0;
  std::size_t term_count = 0;
  bool evaluated = false;  // false when some beta vanishes
  std::optional<std::size_t> truncated_at;  // first vanishing beta (1-based)
  bool identity_holds = false;

  bool passed() const { return evaluated && identity_holds; }
};

// beta_1/(z + alpha_1) + beta_2/(z + alpha_2) + ... over the full table.
GeneralizedCF build_alphabeta_gcf(const AlphaBetaTable& t);
GtildeIdentityReport verify_gtilde_identity(const AlphaBetaTable& t, const Limits& limits = {});
GtildeIdentityReport verify_gtilde_identity(long u, long v, unsigned level, const Limits& limits = {});

// prod_{h=0}^{l} (1 - b^{-3^h} - b^{-2*3^h}), i.e. z * gtilde_{-1,-1,l}(z) at z = b.
Rational eval_gtilde_at(unsigned ell, long b);
// Regular continued fraction statistics of eval_gtilde_at(ell, b).
CFStats gtilde_rcf_stats(long b, unsigned ell, const AnalysisConfig& cfg = {});

}  // namespace tmcf
