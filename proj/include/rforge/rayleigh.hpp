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


// Rayleigh verdicts: coefficient and square-certificate verification, exact
// exchangeable tests, sampling falsification with exact witnesses, and the
// covariance, negative-association, triple-condition and symmetrization probes.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rforge/matroid.hpp"
#include "rforge/polynomial.hpp"
#include "rforge/rng.hpp"

namespace rforge {

enum class Status { Verified, Refuted, Inconclusive };
std::string status_name(Status s);

using Pair = std::pair<int, int>;

struct RayleighVerdict {
  Status status = Status::Inconclusive;
  std::string method;  // coeff-positive, certificate, exchangeable, sample
  std::string detail;
  std::optional<Pair> pair;
  Point witness;              // full ground set; empty unless Refuted
  std::optional<Rat> value;   // Delta Z at the witness, < 0
  std::optional<int> index;   // violating index of an exchangeable sequence
  int samples = 0;
  std::optional<Rat> min_sampled;
};

/// sum_i lambda_i (y^A_i - y^B_i)^2, with A_i, B_i given by labels.
struct SquareCertificate {
  struct Term {
    Rat lambda;
    std::vector<std::string> a;
    std::vector<std::string> b;
  };
  std::vector<Term> terms;

  /// Throws InputError on lambda <= 0, A = B, or labels outside `ground`.
  RatQuad to_poly(const GroundSet& ground) const;
};

struct Strategy {
  enum class Kind { Coeff, Certificate, Sample };
  Kind kind = Kind::Coeff;
  int samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  /// Certificate mode: keyed by (e, f) with e < f; other pairs use coeff.
  std::map<Pair, SquareCertificate> certificates;

  static Strategy coeff() { return {}; }
  static Strategy sample(int n, std::uint64_t seed = kDefaultSeed) { return {Kind::Sample, n, seed, {}}; }
  static Strategy certificate(std::map<Pair, SquareCertificate> certs) { return {Kind::Certificate, 0, kDefaultSeed, std::move(certs)}; }
};

/// Cov(X_e, X_f) = -(y_e y_f / Z^2) Delta Z{e,f} under mu(S) = omega(S) y^S / Z.
Rat covariance(const RatPoly& z, int e, int f, const Point& point);

/// Delta Z{e,f} at a full-ground point from scalar slice values.
Rat rayleigh_value(const RatPoly& z, int e, int f, const Point& point);

RayleighVerdict check_pair(const RatPoly& z, int e, int f, const Strategy& strategy, std::uint64_t stream = 0);

struct AllVerdicts {
  std::vector<std::pair<Pair, RayleighVerdict>> pairs;  // sorted by pair
  Status summary = Status::Verified;
};

/// Every unordered pair, in parallel (capped by RAYLEIGH_FORGE_THREADS).
AllVerdicts check_all(const RatPoly& z, const Strategy& strategy);

/// Verified iff (a-2) and (a-0); otherwise Refuted with the violating index
/// and, when one is found, an exact witness of Delta Z{k,k+1} < 0.
RayleighVerdict exchangeable_check(const SymSeq& a);

/// Delta Z{1,2} of the exchangeable polynomial with every other variable set
/// to t, as ascending coefficients in t.
std::vector<Rat> diagonal_delta(const SymSeq& a);

/// Delta of the exchangeable polynomial for the first two variables, at
/// values `rest` of the remaining m - 2 variables.
Rat exchangeable_delta(const SymSeq& a, const std::vector<Rat>& rest);

struct SymmetrizationReport {
  SymSeq seq;
  AllVerdicts original;  // coefficient strategy on Z
  RayleighVerdict symmetrized;
  bool counterexample = false;  // Z Verified but its symmetrization Refuted
  std::string note;
};

SymmetrizationReport symmetrize_and_check(const RatPoly& z);

struct ProbePoint {
  std::vector<Rat> y;  // values of the m - 2 positional variables y_3..y_m
  Rat z_e, z_f, z_ef, ztilde12;
  Rat margin;       // z(e) z(f) - z(ef) Ztilde^12
  Rat pair_sum;     // the same summed over all pairs
};

struct ConjectureProbe {
  std::vector<ProbePoint> points;
  Rat min_margin;
  Rat min_pair_sum;
};

/// Symmetrized slice inequalities for the pair (e, f). Reports margins only.
ConjectureProbe conjecture_probe(const RatPoly& z, int e, int f, int samples, std::uint64_t seed = kDefaultSeed);

struct AssociationReport {
  int pairs_checked = 0;
  int violations = 0;
  Rat max_excess;  // max of P(A1 and A2) - P(A1) P(A2)
  std::vector<std::pair<std::vector<Mask>, std::vector<Mask>>> examples;  // first few violating up-set pairs
};

/// All up-closed families on each part (|E_i| <= 3), exact comparison.
AssociationReport negative_association_check(const RatPoly& z, Mask part1, Mask part2, const Point& point);

struct TripleReport {
  bool assumed_rayleigh = false;
  int points = 0;
  int negative_theta = 0;
  int violations = 0;
  std::optional<Rat> min_margin;  // 4 D^g D_g - Theta^2 over points with Theta < 0
  Point first_violation;
};

TripleReport triple_condition_check(const RatPoly& z, int e, int f, int g, int samples, bool assumed_rayleigh,
                                    std::uint64_t seed = kDefaultSeed);

struct QcProbe {
  Rat q0;
  Status status;
};

struct QcBracket {
  Rat lower;                 // largest tested q0 without a refutation
  std::optional<Rat> upper;  // smallest refuted q0
  bool exact = false;        // uniform matroids use the exchangeable test
  std::vector<QcProbe> probes;
};

/// Heuristic bracket for the supremum of q in (0,1) at which the Potts
/// polynomial is Rayleigh, by bisection with `steps` probes.
QcBracket estimate_qc(const Matroid& m, int steps, int samples, std::uint64_t seed = kDefaultSeed);

/// Monomials of Delta Z{e,f} with negative coefficients.
std::vector<std::pair<QuadMono, Rat>> negative_terms(const RatPoly& z, int e, int f);

}  // namespace rforge
