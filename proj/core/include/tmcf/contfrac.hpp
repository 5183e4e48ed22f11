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
#include <stdexcept>
#include <string>
#include <vector>

#include "tmcf/arith.hpp"
#include "tmcf/polynomial.hpp"

namespace tmcf {

// [a0; a1, ..., aL] with every ai >= 1 and aL >= 2 (unless L == 0).
struct RegularCF {
  BigInt a0;
  std::vector<BigInt> quotients;

  // L, the number of partial quotients after a0.
  std::size_t length() const { return quotients.size(); }
  // Largest of a1..aL; a0 when there are none.
  BigInt max_quotient() const;
  std::string to_string() const;

  friend bool operator==(const RegularCF&, const RegularCF&) = default;
};

// Canonical regular continued fraction of p/q, p >= 0, q >= 1.
RegularCF rcf_of_rational(const BigInt& p, const BigInt& q);
RegularCF rcf_of_rational(const Rational& x);
Rational fold(const RegularCF& cf);

// p[k]/q[k] is the k-th convergent; index 0 is a0/1.
struct ConvergentTable {
  std::vector<BigInt> p;
  std::vector<BigInt> q;

  std::size_t size() const { return p.size(); }
};

ConvergentTable convergents(const RegularCF& cf);

// leading + n1/(d1 + n2/(d2 + ...)). Partial numerators are never zero.
class GeneralizedCF {
 public:
  struct Term {
    Poly numerator;
    Poly denominator;
    friend bool operator==(const Term&, const Term&) = default;
  };

  GeneralizedCF() = default;
  explicit GeneralizedCF(std::vector<Term> terms, Poly leading = {});

  const std::vector<Term>& terms() const { return terms_; }
  const Poly& leading() const { return leading_; }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const GeneralizedCF&, const GeneralizedCF&) = default;

 private:
  std::vector<Term> terms_;
  Poly leading_;
};

// Raised by gcf_eval when a tail denominator vanishes. depth is the 1-based
// index of the term whose denominator (including the tail below it) is zero.
class ZeroIntermediateDenominator : public DivisionByZero {
 public:
  explicit ZeroIntermediateDenominator(std::size_t depth);
  std::size_t depth() const { return depth_; }

 private:
  std::size_t depth_;
};

// Exact bottom-up evaluation.
RationalFunction gcf_eval(const GeneralizedCF& g);

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Even contraction of v0/(z+1) + v1/(z-1) + v2/(z+1) + ... (2n terms,
// constant numerators) into n terms with the common (z-1) factors removed:
//   a1 = v0 (z-1),          b1 = (z+1)(z-1) + v1,
//   aj = -v(2j-3) v(2j-2),  bj = (z+1)(z-1) + v(2j-1) + v(2j-2),  j >= 2.
GeneralizedCF even_contraction(const GeneralizedCF& g);

}  // namespace tmcf
