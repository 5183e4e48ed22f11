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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmcf/arith.hpp"
#include "tmcf/contfrac.hpp"
#include "tmcf/polynomial.hpp"

namespace tmcf {

// Thue-Morse sign t_k over {-1, +1}: t_0 = 1, t_{2k} = t_k, t_{2k+1} = -t_k.
int thue_morse_sign(std::uint64_t k);

// Levels above this would need 2^32 entries; nothing here gets close.
inline constexpr unsigned kMaxVLevel = 30;

// v_0 .. v_{2^{level+1}-1} for one level of the cross-level recurrence
//   v_0 = 1, v_1 = 2 (level >= 1),
//   v_{2j}   = -v'_j / v_{2j-1},
//   v_{2j+1} = 1 + (-1)^j - v_{2j},       1 <= j <= 2^level - 1,
// where v' is the previous level. Level 0 is (1, 1).
struct VTable {
  unsigned level = 0;
  std::vector<Rational> values;
};

// A v-entry came out zero, so the next division is impossible.
class PropositionViolated : public std::runtime_error {
 public:
  PropositionViolated(unsigned level, std::size_t index);
  unsigned level() const { return level_; }
  std::size_t index() const { return index_; }

 private:
  unsigned level_;
  std::size_t index_;
};

VTable next_v_table(const VTable& previous);
VTable v_table(unsigned level);
// Levels 0..max_level; each level is built from the one before it.
std::vector<VTable> v_tables_up_to(unsigned max_level);

// 1 at j = 1, -1 at j = 2^level and 2^level + 1 (level >= 1), else 0.
std::int64_t expected_v_valuation(unsigned level, std::size_t j);

struct ValuationMismatch {
  std::size_t index;
  Valuation2 observed;
  std::int64_t expected;
};

struct ValuationReport {
  unsigned level = 0;
  std::vector<Valuation2> observed;
  std::vector<ValuationMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

ValuationReport verify_valuation_pattern(const VTable& t);

// v_0/(z+1) + v_1/(z-1) + v_2/(z+1) + ... with 2^{level+1} terms.
GeneralizedCF build_tm_gcf(const VTable& t);
GeneralizedCF build_tm_gcf(unsigned level);

struct FzfracReport {
  unsigned level = 0;
  bool identity_holds = false;
  std::size_t quotient_count = 0;
  std::size_t expected_quotient_count = 0;
  bool all_degree_one = false;
  // Leading coefficient of each partial quotient; informational only.
  std::vector<Rational> leading_coefficients;
  std::optional<std::string> first_divergence;

  bool passed() const {
    return identity_holds && all_degree_one && quotient_count == expected_quotient_count;
  }
};

// gcf_eval(build_tm_gcf(level)) == f_level(z)/z, and the regular polynomial
// continued fraction of that function has 2^{level+1} partial quotients, all
// of degree one.
FzfracReport verify_fzfrac(const VTable& t, const Limits& limits = {});
FzfracReport verify_fzfrac(unsigned level, const Limits& limits = {});

// gcf_eval(build_tm_gcf(next)) == (z-1) * g_level(z^2), where next is the
// level after `level`.
bool verify_substitution(const VTable& next, const Limits& limits = {});

struct ContractionReport {
  unsigned level = 0;
  // gcf_eval(even_contraction(g)) == gcf_eval(g)
  bool sound = false;
  // the contraction evaluates to (z-1) g_{level-1}(z^2)
  bool matches_substitution = false;
  // term-by-term: (z-1)/(z^2+1) + v'_1/(z^2-1) + v'_2/(z^2+1) + ...
  bool matches_previous_level = false;

  bool passed() const { return sound && matches_substitution && matches_previous_level; }
};

// Requires level >= 1; `previous` is the table one level below `t`.
ContractionReport verify_contraction(const VTable& previous, const VTable& t,
                                     const Limits& limits = {});

}  // namespace tmcf
