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


#include <set>

#include "doctest.h"
#include "rforge/matroid.hpp"
#include "support.hpp"

using namespace rforge;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Graph random_connected_graph(SplitMix64& g, int n, int extra) {
  std::vector<Graph::Edge> edges;
  int label = 1;
  for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(g.below(static_cast<std::uint64_t>(v))), v, std::to_string(label++)});
  for (int i = 0; i < extra; ++i) {
    int u = static_cast<int>(g.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(g.below(static_cast<std::uint64_t>(n)));
    if (u != v) edges.push_back({u, v, std::to_string(label++)});
  }
  return Graph(n, edges);
}

}  // namespace

TEST_SUITE("matroid") {

TEST_CASE("graphic rank agrees with union-find") {
  SplitMix64 g(2);
  for (int trial = 0; trial < 30; ++trial) {
    Graph gr = random_connected_graph(g, 2 + static_cast<int>(g.below(5)), static_cast<int>(g.below(5)));
    Matroid m = graphic(gr);
    for (Mask s = 0; s <= m.ground().full(); ++s) CHECK(m.rank(s) == testing::forest_rank(gr, s));
    CHECK_FALSE(rank_axiom_violation(m, true).has_value());
  }
}

TEST_CASE("basis counts") {
  CHECK(enumerate(graphic(Graph::complete(4)), Family::Bases).size() == 16);
  CHECK(enumerate(graphic(Graph::complete(5)), Family::Bases).size() == 125);
  for (int m = 1; m <= 7; ++m)
    for (int r = 0; r <= m; ++r) {
      Matroid u = uniform(m, r);
      CHECK(Rat(static_cast<long>(enumerate(u, Family::Bases).size())) == binomial(m, r));
      long indep = 0;
      for (int k = 0; k <= r; ++k) indep += binomial(m, k).num().get_si();
      CHECK(static_cast<long>(enumerate(u, Family::Independent).size()) == indep);
    }
  CHECK(enumerate(graphic(Graph::cycle(5)), Family::Spanning).size() == 6);
}

TEST_CASE("golden invariant sequences") {
  Matroid k4 = graphic(Graph::complete(4));
  auto s = invariant_sequences(k4, bit(0));
  CHECK(s.independent == rats({1, 6, 15, 16}));
  CHECK(s.flats == rats({1, 6, 7, 1}));
  CHECK(s.basis_split == rats({8, 8}));
  auto u = invariant_sequences(uniform(3, 2));
  CHECK(u.broken_circuit == rats({1, 3, 2}));
  CHECK(u.h == rats({1, 1, 1}));
  CHECK(u.basis_split.empty());
}

TEST_CASE("minors and duality") {
  SplitMix64 g(9);
  for (int trial = 0; trial < 20; ++trial) {
    Graph gr = random_connected_graph(g, 3 + static_cast<int>(g.below(3)), 1 + static_cast<int>(g.below(4)));
    Matroid m = graphic(gr);
    Mask full = m.ground().full();
    Matroid d = dual(m);
    CHECK(d.rank() == m.size() - m.rank());
    for (Mask s = 0; s <= full; ++s) CHECK(d.rank(s) == popcount(s) + m.rank(full & ~s) - m.rank());
    int e = static_cast<int>(g.below(static_cast<std::uint64_t>(m.size())));
    Matroid del = delete_element(m, e);
    Matroid con = contract_element(m, e);
    for (Mask s = 0; s <= del.ground().full(); ++s) {
      Mask up = expand(s, bit(e));
      CHECK(del.rank(s) == m.rank(up));
      CHECK(con.rank(s) == m.rank(up | bit(e)) - m.rank(bit(e)));
    }
    // Deletion and contraction swap under duality.
    Matroid lhs = dual(delete_element(m, e)), rhs = contract_element(d, e);
    for (Mask s = 0; s <= lhs.ground().full(); ++s) CHECK(lhs.rank(s) == rhs.rank(s));
  }
}

TEST_CASE("bases input") {
  GroundSet gs = GroundSet::numbered(4);
  SetSystem good(gs, {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  Matroid m = from_bases(good);
  CHECK(m.rank() == 2);
  CHECK(m.rank(0b0111) == 2);
  // {1,2} and {3,4} alone fail exchange.
  SetSystem bad(gs, {0b0011, 0b1100});
  auto w = find_exchange_violation(bad);
  REQUIRE(w.has_value());
  CHECK_THROWS_AS(from_bases(bad), BasisExchangeError);
  SetSystem uneven(gs, {0b0001, 0b0011});
  CHECK(find_exchange_violation(uneven).has_value());
}

TEST_CASE("rank axioms are enforced") {
  GroundSet gs = GroundSet::numbered(3);
  CHECK_THROWS_AS(Matroid(gs, [](Mask s) { return popcount(s) == 0 ? 1 : 1; }, "bad"), InputError);
  CHECK_THROWS_AS(Matroid(gs, [](Mask s) { return 2 * popcount(s); }, "bad"), InputError);
}

TEST_CASE("two-sum of triangles is a four-cycle") {
  Matroid l = relabel(uniform(3, 2), GroundSet({"a", "b", "g"}));
  Matroid r = relabel(uniform(3, 2), GroundSet({"g", "c", "d"}));
  Matroid s = two_sum(l, r, "g");
  CHECK(s.size() == 4);
  CHECK(s.rank() == 3);
  CHECK(enumerate(s, Family::Bases).size() == 4);
  CHECK_THROWS_AS(two_sum(l, relabel(uniform(3, 3), GroundSet({"g", "c", "d"})), "g"), InputError);
}

TEST_CASE("parallel extension") {
  Matroid m = parallel_extend(uniform(2, 2), {{"1", 3}});
  CHECK(m.size() == 4);
  CHECK(m.rank() == 2);
  CHECK(m.ground().find("1.2").has_value());
  CHECK(m.rank(m.ground().mask_of({"1.1", "1.3"})) == 1);
}

TEST_CASE("loops and coloops") {
  Graph gr(3, {{0, 1, "a"}, {1, 2, "b"}});
  Matroid m = graphic(gr);
  CHECK(m.is_coloop(0));
  CHECK_FALSE(m.is_loop(0));
  CHECK(uniform(3, 0).is_loop(1));
}

TEST_CASE("forest weights and the laplacian") {
  for (int n = 2; n <= 5; ++n) {
    auto fw = forest_weights(Graph::complete(n));
    CHECK(fw.identity_holds);
    CHECK(fw.f.front() == Rat(1));
  }
  // Path on three vertices: det(tI + L) = t^3 + 4t^2 + 3t.
  auto p = weighted_laplacian_charpoly(Graph(3, {{0, 1, "1"}, {1, 2, "2"}}), {Rat(1), Rat(1)});
  CHECK(p == rats({0, 3, 4, 1}));
  CHECK_THROWS_AS(forest_weights(Graph(3, {{0, 1, "1"}})), InputError);
}

}  // TEST_SUITE
