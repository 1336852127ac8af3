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


// Potts-model partition functions Z(M, q; y) = sum_S q^(-rank S) y^S, their
// slices along an element, and composition along a two-sum in the bases,
// independent-set, spanning-set and Potts models.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rforge/matroid.hpp"
#include "rforge/polynomial.hpp"

namespace rforge {

using LaurentPoly = SubsetPoly<LaurentQ>;

enum class ModelKind { Bases, Independent, Spanning, Potts };

struct Model {
  ModelKind kind = ModelKind::Bases;
  std::optional<Rat> q0;  // Potts only; empty means symbolic q

  static Model bases() { return {ModelKind::Bases, std::nullopt}; }
  static Model independent() { return {ModelKind::Independent, std::nullopt}; }
  static Model spanning() { return {ModelKind::Spanning, std::nullopt}; }
  static Model potts_symbolic() { return {ModelKind::Potts, std::nullopt}; }
  static Model potts_at(const Rat& q) { return {ModelKind::Potts, q}; }
  /// "bases", "indep", "span", "potts" (symbolic unless q is given).
  static Model parse(const std::string& tag, const std::optional<Rat>& q = std::nullopt);

  bool symbolic() const { return kind == ModelKind::Potts && !q0; }
  std::string name() const;
  friend bool operator==(const Model&, const Model&) = default;
};

/// Partition function tagged with its model. Symbolic Potts polynomials have
/// LaurentQ coefficients; everything else is rational.
struct PartitionPoly {
  Model model;
  std::variant<RatPoly, LaurentPoly> poly;
  std::optional<Matroid> source;

  bool symbolic() const { return std::holds_alternative<LaurentPoly>(poly); }
  const RatPoly& rat() const;
  const LaurentPoly& laurent() const;
  const GroundSet& ground() const;
};

inline constexpr int kPottsLimit = 20;

/// Sum over all subsets of q^(-rank S) y^S. Uniform matroids skip the rank
/// oracle and use a_k = q^(-min(r, k)).
LaurentPoly potts_symbolic(const Matroid& m);
/// Same at q = q0 > 0.
RatPoly potts_evaluated(const Matroid& m, const Rat& q0);
/// potts_symbolic or potts_evaluated according to the model.
PartitionPoly potts_poly(const Matroid& m, const Model& model);
/// Direct construction by enumeration in any model.
PartitionPoly model_poly(const Matroid& m, const Model& model);

/// Substitutes q = q0 in every coefficient.
RatPoly eval_q(const LaurentPoly& p, const Rat& q0);

/// Coefficients q0^(-min(r, k)), k = 0..m, of the uniform Potts polynomial.
SymSeq uniform_potts_sequence(int m, int r, const Rat& q0);

struct IdentityReport {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct PottsSlices {
  int g = -1;
  bool loop = false;
  bool coloop = false;
  LaurentPoly deleted;     // M^g
  LaurentPoly contracted;  // M_g = q^a(g) dM/dy_g
  std::vector<IdentityReport> reports;

  bool all_hold() const;
};

/// Slices of the symbolic Potts polynomial along g, with the slice
/// identities checked exactly and the inequalities q M^g < M_g <= M^g
/// checked at `samples` random points with 0 < q < 1 and y > 0.
PottsSlices potts_slices(const Matroid& m, int g, std::uint64_t seed = 0xD1CE, int samples = 100);

/// Composes partition functions of L and M along the shared element g.
/// Both inputs must carry the requested model. Symbolic and evaluated Potts
/// compositions compute both closed forms and throw InternalError if they
/// disagree; q0 = 1 is rejected.
PartitionPoly twosum_compose(const PartitionPoly& l, const PartitionPoly& m, const std::string& g, const Model& model);

/// Sets S minimizing the q-exponent of q^((1-a) r) Z(M, q; q^a y), with
/// a = alpha_halves / 2. Spanning sets at a = 0, bases at a = 1/2,
/// independent sets at a = 1.
SetSystem dominant_support(const Matroid& m, int alpha_halves);

}  // namespace rforge
