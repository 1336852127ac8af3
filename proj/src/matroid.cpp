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

#include "rforge/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "rforge/linalg.hpp"
#include "rforge/rng.hpp"

namespace rforge {

// ---------------------------------------------------------------- SetSystem

SetSystem::SetSystem(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)), lookup_(members_) {
  std::sort(lookup_.begin(), lookup_.end());
  if (std::adjacent_find(lookup_.begin(), lookup_.end()) != lookup_.end())
    throw InputError("set system has a repeated member");
  for (Mask s : members_)
    if (s & ~ground_.full()) throw InputError("set system member outside the ground set");
}

bool SetSystem::contains(Mask s) const { return std::binary_search(lookup_.begin(), lookup_.end(), s); }

SetSystem SetSystem::sorted() const {
  std::vector<Mask> m = members_;
  std::sort(m.begin(), m.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return SetSystem(ground_, std::move(m));
}

RatPoly SetSystem::indicator() const {
  RatPoly z(ground_);
  for (Mask s : members_) z.add_term(s, Rat(1));
  return z;
}

bool operator==(const SetSystem& a, const SetSystem& b) { return a.ground_ == b.ground_ && a.lookup_ == b.lookup_; }

// -------------------------------------------------------------------- Graph

Graph::Graph(int vertices, std::vector<Edge> edge_list) : n(vertices), edges(std::move(edge_list)) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InputError("edge '" + e.label + "' has a vertex out of range");
    if (e.u == e.v) throw InputError("edge '" + e.label + "' is a loop");
  }
  (void)ground();  // validates labels
}

GroundSet Graph::ground() const {
  std::vector<std::string> labels;
  for (const auto& e : edges) labels.push_back(e.label);
  return GroundSet(std::move(labels));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

bool Graph::connected() const {
  UnionFind uf(n);
  int merges = 0;
  for (const auto& e : edges) merges += uf.unite(e.u, e.v) ? 1 : 0;
  return merges == n - 1;
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  int label = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j, std::to_string(label++)});
  return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, std::to_string(i + 1)});
  return Graph(n, std::move(es));
}

// ------------------------------------------------------------------ Matroid

struct Matroid::Cache {
  std::shared_mutex mu;
  std::unordered_map<Mask, int> ranks;
};

Matroid::Matroid(GroundSet ground, RankFn rank, std::string provenance)
    : ground_(std::move(ground)), fn_(std::move(rank)), cache_(std::make_shared<Cache>()),
      provenance_(std::move(provenance)) {
  full_rank_ = this->rank(ground_.full());
  if (auto bad = rank_axiom_violation(*this, false, 0x5EED)) throw InputError("rank oracle for " + provenance_ + ": " + *bad);
}

int Matroid::rank(Mask s) const {
  if (s & ~ground_.full()) throw InputError("rank query outside the ground set");
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->ranks.find(s);
    if (it != cache_->ranks.end()) return it->second;
  }
  int r = fn_(s);
  std::unique_lock lock(cache_->mu);
  cache_->ranks.emplace(s, r);
  return r;
}

std::optional<std::string> rank_axiom_violation(const Matroid& m, bool exhaustive, std::uint64_t seed) {
  const int n = m.size();
  const Mask full = m.ground().full();
  if (m.rank(0) != 0) return "rank(empty) != 0";
  auto check_set = [&](Mask s) -> std::optional<std::string> {
    int rs = m.rank(s);
    if (rs < 0 || rs > popcount(s)) return "rank out of range on " + m.ground().format(s);
    for (int e = 0; e < n; ++e) {
      if (has(s, e)) continue;
      int d = m.rank(s | bit(e)) - rs;
      if (d != 0 && d != 1) return "non-unit increment adding element " + m.ground().label(e) + " to " + m.ground().format(s);
    }
    return std::nullopt;
  };
  auto check_pair = [&](Mask s, Mask t) -> std::optional<std::string> {
    if (m.rank(s) + m.rank(t) < m.rank(s | t) + m.rank(s & t))
      return "submodularity fails on " + m.ground().format(s) + ", " + m.ground().format(t);
    return std::nullopt;
  };
  if (exhaustive && n <= 10) {
    for (Mask s = 0; s <= full; ++s)
      if (auto bad = check_set(s)) return bad;
    for (Mask s = 0; s <= full; ++s)
      for (Mask t = s + 1; t <= full; ++t)
        if (auto bad = check_pair(s, t)) return bad;
    return std::nullopt;
  }
  SplitMix64 g(seed);
  for (int i = 0; i < 64; ++i) {
    Mask s = static_cast<Mask>(g.next()) & full;
    Mask t = static_cast<Mask>(g.next()) & full;
    if (auto bad = check_set(s)) return bad;
    if (auto bad = check_pair(s, t)) return bad;
  }
  return std::nullopt;
}

std::optional<ExchangeWitness> find_exchange_violation(const SetSystem& q) {
  for (Mask a : q.members())
    for (Mask b : q.members()) {
      Mask only_a = a & ~b, only_b = b & ~a;
      for (Mask x = only_a; x != 0; x &= x - 1) {
        int e = std::countr_zero(x);
        bool ok = false;
        for (Mask y = only_b; y != 0 && !ok; y &= y - 1) ok = q.contains((a & ~bit(e)) | bit(std::countr_zero(y)));
        if (!ok) return ExchangeWitness{a, b, e};
      }
    }
  return std::nullopt;
}

Matroid uniform(int m, int r) { return uniform(GroundSet::numbered(m), r); }

Matroid uniform(const GroundSet& ground, int r) {
  if (r < 0 || r > ground.size()) throw InputError("uniform matroid needs 0 <= r <= m");
  return Matroid(ground, [r](Mask s) { return std::min(r, popcount(s)); },
                 "uniform(" + std::to_string(ground.size()) + "," + std::to_string(r) + ")");
}

Matroid graphic(const Graph& g) {
  auto edges = g.edges;
  int n = g.n;
  return Matroid(g.ground(), [edges, n](Mask s) {
    UnionFind uf(n);
    int r = 0;
    for (Mask t = s; t != 0; t &= t - 1) {
      const auto& e = edges[static_cast<std::size_t>(std::countr_zero(t))];
      r += uf.unite(e.u, e.v) ? 1 : 0;
    }
    return r;
  }, "graphic");
}

Matroid from_bases(const SetSystem& bases) {
  if (bases.size() == 0) throw InputError("from_bases: empty basis list");
  const int r = popcount(bases.members().front());
  for (Mask b : bases.members())
    if (popcount(b) != r)
      throw BasisExchangeError("from_bases: bases " + bases.ground().format(bases.members().front()) + " and " +
                                   bases.ground().format(b) + " differ in size",
                               ExchangeWitness{bases.members().front(), b, -1});
  if (auto w = find_exchange_violation(bases)) {
    throw BasisExchangeError("basis exchange fails for A=" + bases.ground().format(w->a) + ", B=" +
                                 bases.ground().format(w->b) + ", a=" + bases.ground().label(w->element),
                             *w);
  }
  auto members = bases.members();
  return Matroid(bases.ground(), [members](Mask s) {
    int best = 0;
    for (Mask b : members) best = std::max(best, popcount(s & b));
    return best;
  }, "bases");
}

Matroid delete_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw InputError("unknown element index");
  Mask gone = bit(e);
  return Matroid(m.ground().without(gone), [m, gone](Mask s) { return m.rank(expand(s, gone)); }, "minor");
}

Matroid contract_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw InputError("unknown element index");
  Mask gone = bit(e);
  int re = m.rank(gone);
  return Matroid(m.ground().without(gone), [m, gone, re](Mask s) { return m.rank(expand(s, gone) | gone) - re; }, "minor");
}

Matroid dual(const Matroid& m) {
  Mask full = m.ground().full();
  int r = m.rank();
  return Matroid(m.ground(), [m, full, r](Mask s) { return popcount(s) + m.rank(full & ~s) - r; }, "dual");
}

Matroid relabel(const Matroid& m, const GroundSet& labels) {
  if (labels.size() != m.size()) throw InputError("relabel: size mismatch");
  return Matroid(labels, [m](Mask s) { return m.rank(s); }, m.provenance());
}

Matroid two_sum(const Matroid& l, const Matroid& m, const std::string& g) {
  int gl = l.ground().index_of(g);
  int gm = m.ground().index_of(g);
  for (const auto& lab : l.ground().labels())
    if (lab != g && m.ground().find(lab)) throw InputError("two_sum: ground sets share '" + lab + "' besides '" + g + "'");
  if (l.is_loop(gl) || m.is_loop(gm)) throw InputError("two_sum: '" + g + "' is a loop");
  if (l.is_coloop(gl) || m.is_coloop(gm)) throw InputError("two_sum: '" + g + "' is a coloop");

  GroundSet lg = l.ground().without(bit(gl));
  GroundSet mg = m.ground().without(bit(gm));
  GroundSet ng = lg.union_with(mg);
  const int nl = lg.size();
  return Matroid(ng, [l, m, gl, gm, nl](Mask s) {
    Mask sl = expand(s & low_mask(nl), bit(gl));
    Mask sm = expand(s >> nl, bit(gm));
    int nu = (l.in_closure(sl, gl) && m.in_closure(sm, gm)) ? 1 : 0;
    return l.rank(sl) + m.rank(sm) - nu;
  }, "twosum");
}

Matroid parallel_extend(const Matroid& m, const std::map<std::string, int>& mult) {
  for (const auto& [label, k] : mult) {
    (void)m.ground().index_of(label);
    if (k < 1) throw InputError("multiplicity of '" + label + "' must be positive");
  }
  std::vector<std::string> labels;
  std::vector<int> origin;
  for (int e = 0; e < m.size(); ++e) {
    const auto& lab = m.ground().label(e);
    auto it = mult.find(lab);
    int k = it == mult.end() ? 1 : it->second;
    if (static_cast<int>(labels.size()) + k > kMaxGround) throw InputError("parallel extension exceeds the ground-set limit");
    for (int c = 1; c <= k; ++c) {
      labels.push_back(k == 1 ? lab : lab + "." + std::to_string(c));
      origin.push_back(e);
    }
  }
  return Matroid(GroundSet(std::move(labels)), [m, origin](Mask s) {
    Mask touched = 0;
    for (Mask t = s; t != 0; t &= t - 1) touched |= bit(origin[static_cast<std::size_t>(std::countr_zero(t))]);
    return m.rank(touched);
  }, "parallel");
}

namespace {

void require_enumerable(const Matroid& m) {
  if (m.size() > kEnumerationLimit)
    throw InputError("ground set of size " + std::to_string(m.size()) + " is too large to enumerate (limit " +
                     std::to_string(kEnumerationLimit) + ")");
}

template <class F>
void for_each_subset(Mask full, F&& f) {
  for (Mask s = 0;; ++s) {
    f(s);
    if (s == full) break;
  }
}

}  // namespace

SetSystem enumerate(const Matroid& m, Family family) {
  require_enumerable(m);
  std::vector<Mask> out;
  const int r = m.rank();
  for_each_subset(m.ground().full(), [&](Mask s) {
    int rs = m.rank(s);
    bool indep = rs == popcount(s);
    bool span = rs == r;
    bool keep = family == Family::Independent ? indep : family == Family::Spanning ? span : (indep && span);
    if (keep) out.push_back(s);
  });
  return SetSystem(m.ground(), std::move(out));
}

InvariantSequences invariant_sequences(const Matroid& m, std::optional<Mask> eprime) {
  require_enumerable(m);
  const int r = m.rank();
  const int n = m.size();
  const auto ur = static_cast<std::size_t>(r);
  InvariantSequences out;
  out.independent.assign(ur + 1, Rat(0));
  out.flats.assign(ur + 1, Rat(0));
  std::vector<Rat> charpoly(ur + 1, Rat(0));  // indexed by rank(S)
  std::size_t split_len = eprime ? static_cast<std::size_t>(std::min(r, popcount(*eprime))) + 1 : 0;
  out.basis_split.assign(split_len, Rat(0));

  for_each_subset(m.ground().full(), [&](Mask s) {
    int rs = m.rank(s);
    auto urs = static_cast<std::size_t>(rs);
    if (rs == popcount(s)) {
      out.independent[urs] += Rat(1);
      if (rs == r && eprime) out.basis_split[static_cast<std::size_t>(popcount(s & *eprime))] += Rat(1);
    }
    bool flat = true;
    for (int e = 0; e < n && flat; ++e)
      if (!has(s, e) && m.rank(s | bit(e)) == rs) flat = false;
    if (flat) out.flats[urs] += Rat(1);
    charpoly[urs] += (popcount(s) % 2 == 0) ? Rat(1) : Rat(-1);
  });

  for (const auto& c : charpoly) out.broken_circuit.push_back(c.sign() < 0 ? -c : c);

  // sum_j I_j t^j = sum_k h_k t^k (1+t)^(r-k): I_j = sum_{k<=j} h_k C(r-k, j-k).
  out.h.assign(ur + 1, Rat(0));
  for (int j = 0; j <= r; ++j) {
    Rat v = out.independent[static_cast<std::size_t>(j)];
    for (int k = 0; k < j; ++k) v -= out.h[static_cast<std::size_t>(k)] * binomial(r - k, j - k);
    out.h[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

// ----------------------------------------------------------- forest weights

ForestWeights forest_weights(const Graph& g) {
  if (!g.connected()) throw InputError("forest_weights: graph is not connected");
  if (static_cast<int>(g.edges.size()) > kEnumerationLimit) throw InputError("forest_weights: too many edges");
  GroundSet ground = g.ground();
  ForestWeights out;
  out.omega = RatPoly(ground);
  out.f.assign(static_cast<std::size_t>(g.n), Rat(0));
  for_each_subset(ground.full(), [&](Mask s) {
    UnionFind uf(g.n);
    bool forest = true;
    for (Mask t = s; t != 0 && forest; t &= t - 1) {
      const auto& e = g.edges[static_cast<std::size_t>(std::countr_zero(t))];
      forest = uf.unite(e.u, e.v);
    }
    if (!forest) return;
    std::vector<long> sizes(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) ++sizes[static_cast<std::size_t>(uf.find(v))];
    Rat w(1);
    for (long sz : sizes)
      if (sz > 0) w *= Rat(sz);
    out.omega.add_term(s, w);
    out.f[static_cast<std::size_t>(popcount(s))] += w;
  });
  out.charpoly = weighted_laplacian_charpoly(g, Point(g.edges.size(), Rat(1)));
  // Coefficient of t^(n-k) must be f_k.
  out.identity_holds = out.charpoly.size() == static_cast<std::size_t>(g.n) + 1;
  for (int k = 0; k <= g.n && out.identity_holds; ++k) {
    Rat fk = k < g.n ? out.f[static_cast<std::size_t>(k)] : Rat(0);
    out.identity_holds = out.charpoly[static_cast<std::size_t>(g.n - k)] == fk;
  }
  return out;
}

std::vector<Rat> weighted_laplacian_charpoly(const Graph& g, const Point& y) {
  if (y.size() != g.edges.size()) throw InputError("edge weight vector has the wrong length");
  const auto n = static_cast<std::size_t>(g.n);
  RatMatrix neg_q(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto u = static_cast<std::size_t>(g.edges[i].u), v = static_cast<std::size_t>(g.edges[i].v);
    neg_q[u][u] -= y[i];
    neg_q[v][v] -= y[i];
    neg_q[u][v] += y[i];
    neg_q[v][u] += y[i];
  }
  // det(tI + Q) = det(tI - (-Q)).
  return characteristic_polynomial(neg_q);
}

}  // namespace rforge
