// Copyright 2026 The Authors.
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

// Unimodality and log-concavity conditions on finite nonnegative sequences,
// Sturm root counting, and the convolution identity behind closure of
// log-concavity under convolution.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rforge/arith.hpp"
#include "rforge/matroid.hpp"

namespace rforge {

/// a_s, ..., a_r stored from index `offset` = s. `m` is the ambient size
/// used by the binomially normalized condition.
struct Seq {
  int offset = 0;
  std::vector<Rat> entries;
  std::optional<int> m;

  Seq() = default;
  Seq(std::vector<Rat> values, std::optional<int> ambient = std::nullopt, int s = 0);

  int first() const { return offset; }
  int last() const { return offset + static_cast<int>(entries.size()) - 1; }
  /// Zero outside [s, r].
  Rat at(int k) const;
};

enum class Condition { A0, A1, A2, A3, A4, A5, A6 };

std::string condition_name(Condition c);
/// Accepts "a0".."a6" (also "a-0" style).
Condition parse_condition(std::string_view text);
inline constexpr Condition kAllConditions[] = {Condition::A0, Condition::A1, Condition::A2, Condition::A3,
                                               Condition::A4, Condition::A5, Condition::A6};

struct ConditionResult {
  bool holds = true;
  std::optional<int> witness;  // offending index k
  std::string detail;
};

/// Throws InputError for a4 without m, or a negative entry.
ConditionResult check_condition(const Seq& a, Condition cond);

/// Dense univariate polynomial c_0 + c_1 t + ... over the rationals.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& lead() const { return c_.back(); }
  Rat eval(const Rat& t) const;
  IntPoly derivative() const;
  /// Sign at +infinity (dir > 0) or -infinity (dir < 0).
  int sign_at_infinity(int dir) const;

  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Euclidean division; throws InputError on a zero divisor.
  static std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);
  /// Monic gcd.
  static IntPoly gcd(IntPoly a, IntPoly b);

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Number of distinct real roots in (lo, hi]; absent bounds are infinite.
/// Throws InputError on the zero polynomial.
int sturm_real_roots(const IntPoly& p, const std::optional<Rat>& lo = std::nullopt,
                     const std::optional<Rat>& hi = std::nullopt);

/// True iff every root of p is real and <= 0, counted with multiplicity.
bool real_nonpositive_rooted(const IntPoly& p);

struct ConvolutionIdentity {
  Rat lhs;
  Rat rhs;
  bool equal = false;
};

/// c_n = sum_k a_(n+k) b_k; compares c_n^2 - c_(n-1) c_(n+1) with the
/// double sum over 0 <= j <= k of
/// [a_(n+j) a_(n+k) - a_(n+j-1) a_(n+k+1)] [b_j b_k - b_(j-1) b_(k+1)].
/// Indices are absolute (a_i = 0 outside the stored range). Requires n >= 1.
ConvolutionIdentity convolution_identity(const Seq& a, const Seq& b, int n);

/// Sequence (c_n) for all n with a possibly nonzero term.
Seq convolve(const Seq& a, const Seq& b);

struct MasonReport {
  InvariantSequences seqs;
  int m = 0;
  int r = 0;
  std::vector<std::pair<std::string, ConditionResult>> independent;  // I-0..I-6
  ConditionResult h_logconcave;          // (h-2,0)
  ConditionResult h_normalized_nonincreasing;
  bool h_integral = true;

  /// (I-0)..(I-4) and (h-2,0). (I-5) is reported only: it fails already
  /// for K4 and U(4,2). The normalized h-vector claim is reported only: it
  /// fails for U(6,3), h = (1,3,6,10).
  bool all_pass() const;
};

MasonReport mason_report(const Matroid& mat);

}  // namespace rforge
