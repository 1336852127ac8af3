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

// Matroids as memoized exact rank oracles.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rforge/arith.hpp"
#include "rforge/errors.hpp"
#include "rforge/ground.hpp"
#include "rforge/polynomial.hpp"

namespace rforge {

/// Set system on a ground set; members are distinct.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(GroundSet ground, std::vector<Mask> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask s) const;
  /// Members sorted by (size, mask).
  SetSystem sorted() const;
  RatPoly indicator() const;

  friend bool operator==(const SetSystem& a, const SetSystem& b);

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
  std::vector<Mask> lookup_;  // sorted copy for contains()
};

/// Multigraph without loops. Vertices are 0..n-1.
struct Graph {
  struct Edge {
    int u = 0;
    int v = 0;
    std::string label;
  };
  int n = 0;
  std::vector<Edge> edges;

  Graph() = default;
  Graph(int vertices, std::vector<Edge> edge_list);

  GroundSet ground() const;
  bool connected() const;
  /// K_n with edges {i,j}, i<j, labeled 1, 2, ... in lexicographic order.
  static Graph complete(int n);
  static Graph cycle(int n);
};

class Matroid {
 public:
  using RankFn = std::function<int(Mask)>;

  /// Spot-checks the rank axioms on random subsets; throws InputError on violation.
  Matroid(GroundSet ground, RankFn rank, std::string provenance);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  /// Memoized; safe for concurrent use.
  int rank(Mask s) const;
  int rank() const { return full_rank_; }
  const std::string& provenance() const { return provenance_; }

  bool in_closure(Mask s, int x) const { return rank(s | bit(x)) == rank(s); }
  bool is_loop(int e) const { return rank(bit(e)) == 0; }
  bool is_coloop(int e) const { return rank(ground_.full() & ~bit(e)) == full_rank_ - 1; }
  bool is_independent(Mask s) const { return rank(s) == popcount(s); }

 private:
  struct Cache;

  GroundSet ground_;
  RankFn fn_;
  std::shared_ptr<Cache> cache_;
  int full_rank_ = 0;
  std::string provenance_;
};

struct ExchangeWitness {
  Mask a = 0;
  Mask b = 0;
  int element = -1;  // a in A \ B with no valid swap
};

class BasisExchangeError : public InputError {
 public:
  BasisExchangeError(const std::string& what, ExchangeWitness w) : InputError(what), witness(w) {}
  ExchangeWitness witness;
};

/// Exhaustive basis-exchange verification: for all A, B and a in A \ B there
/// is b in B \ A with A - a + b a member. Equicardinality is checked first.
std::optional<ExchangeWitness> find_exchange_violation(const SetSystem& q);

Matroid uniform(int m, int r);
Matroid uniform(const GroundSet& ground, int r);
Matroid graphic(const Graph& g);
/// Throws BasisExchangeError with the witness triple on invalid input.
Matroid from_bases(const SetSystem& bases);

Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
Matroid dual(const Matroid& m);
/// Same matroid on new labels; sizes must agree.
Matroid relabel(const Matroid& m, const GroundSet& labels);
/// L (+)_g M: requires E(L) and E(M) to share exactly the label g, and g to
/// be neither a loop nor a coloop of either side.
Matroid two_sum(const Matroid& l, const Matroid& m, const std::string& g);
/// Replaces each element e by mult[e] parallel copies (labels e.1, e.2, ...
/// when mult > 1). Missing entries default to 1.
Matroid parallel_extend(const Matroid& m, const std::map<std::string, int>& mult);

enum class Family { Bases, Independent, Spanning };
inline constexpr int kEnumerationLimit = 24;

SetSystem enumerate(const Matroid& m, Family family);

struct InvariantSequences {
  std::vector<Rat> independent;     // I_k
  std::vector<Rat> flats;           // W_k
  std::vector<Rat> broken_circuit;  // chi_k
  std::vector<Rat> h;               // h_k, possibly non-integral
  std::vector<Rat> basis_split;     // c_k; empty without E'
};

InvariantSequences invariant_sequences(const Matroid& m, std::optional<Mask> eprime = std::nullopt);

/// Exhaustive (m <= 10) or random check of normalization, monotonicity,
/// unit increments and submodularity. Returns a description of the first
/// violation, if any.
std::optional<std::string> rank_axiom_violation(const Matroid& m, bool exhaustive, std::uint64_t seed = 1);

struct ForestWeights {
  RatPoly omega;                 // omega_G on spanning forests
  std::vector<Rat> f;            // f_0..f_{n-1}
  std::vector<Rat> charpoly;     // det(tI + L), ascending in t
  bool identity_holds = false;   // sum_k f_k t^(n-k) == charpoly
};

/// Product of component sizes on spanning forests; requires G connected.
ForestWeights forest_weights(const Graph& g);
/// det(t I + D diag(y) D^T), ascending coefficients in t.
std::vector<Rat> weighted_laplacian_charpoly(const Graph& g, const Point& y);

}  // namespace rforge
