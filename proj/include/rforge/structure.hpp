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


// Supports of nonnegative weight functions: convexity, the symmetric
// exchange axiom, logarithmic submodularity, flattening to a matroid, layer
// matroids, and the necessary-condition suite for Rayleigh supports.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rforge/matroid.hpp"
#include "rforge/polynomial.hpp"
#include "rforge/rng.hpp"

namespace rforge {

struct SupportProfile {
  GroundSet ground;
  SetSystem support;
  int r = 0;  // largest member size
  int s = 0;  // smallest member size
};

/// Throws InputError on a negative coefficient or an empty support.
SupportProfile support(const RatPoly& omega);
SupportProfile profile(const SetSystem& q);

/// (S, T, S') with S <= T <= S', S and S' members, T not.
struct ConvexWitness {
  Mask s = 0, t = 0, s_prime = 0;
};
std::optional<ConvexWitness> convexity_violation(const SetSystem& q);
inline bool is_convex(const SetSystem& q) { return !convexity_violation(q); }

/// (A, B, e): no f in A^B with A ^ {e,f} a member.
struct SeaWitness {
  Mask a = 0, b = 0;
  int e = -1;
};
std::optional<SeaWitness> sea_violation(const SetSystem& q);
inline bool sea_check(const SetSystem& q) { return !sea_violation(q); }

struct PairWitness {
  Mask s = 0, t = 0;
};
/// omega(S) omega(T) >= omega(S & T) omega(S | T). Exhaustive for m <= 10,
/// otherwise `random_pairs` seeded pairs.
std::optional<PairWitness> log_submodular_violation(const RatPoly& omega, int random_pairs = 100000,
                                                    std::uint64_t seed = kDefaultSeed);
inline bool log_submodular_check(const RatPoly& omega) { return !log_submodular_violation(omega); }

struct Flattening {
  GroundSet ground;  // E followed by l fresh elements
  int l = 0;
  int r = 0, s = 0;
  SetSystem members;  // Q-flat
  RatPoly omega;      // sum_S omega(S) y^S e_(r-|S|)(fresh)
  std::optional<ExchangeWitness> exchange_violation;
  bool exchange_ok() const { return !exchange_violation; }
};

/// Fresh labels are 1..l, prefixed with '_' while they clash with E.
Flattening flatten(const RatPoly& omega);
Flattening flatten(const SetSystem& q);

struct Layer {
  int k = 0;
  SetSystem members;
  std::optional<ExchangeWitness> exchange_violation;
  bool exchange_ok() const { return !exchange_violation; }
};
/// Q_k for s <= k <= r.
std::vector<Layer> layers(const SetSystem& q);

struct PropertyResult {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;  // first failure, formatted on the ground set
};

struct ExchangeProps {
  bool vacuous = false;  // input is not a convex delta-matroid
  std::vector<PropertyResult> results;  // 4.7a..d, maximal, minimal
  bool all_hold() const;
};
ExchangeProps exchange_props_check(const SetSystem& q);

/// Whether (f_s..f_r) satisfies (a-2) and (a-0) agrees with the exchangeable
/// verdict on the flattened polynomial with y_E = 1.
PropertyResult flattened_exchangeable(const RatPoly& omega);

/// Necessary conditions for a Rayleigh weight function, each checked
/// exhaustively on its support: convexity, SEA, log-submodularity, the
/// full-support criterion, the slice property, flattening, exchange
/// properties, the homogeneous, down-closed and IM-meet-SN descriptions,
/// and the flattened exchangeable equivalence.
std::vector<PropertyResult> support_suite(const RatPoly& omega);

}  // namespace rforge
