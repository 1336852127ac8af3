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


#include "doctest.h"
#include "rforge/potts.hpp"
#include "rforge/structure.hpp"
#include "support.hpp"

using namespace rforge;

namespace {

SetSystem sets(int m, std::vector<Mask> members) { return SetSystem(GroundSet::numbered(m), std::move(members)); }

bool brute_convex(const SetSystem& q) {
  for (Mask a : q.members())
    for (Mask b : q.members()) {
      if ((a & b) != a) continue;
      Mask gap = b & ~a;
      for (Mask t = gap;; t = (t - 1) & gap) {
        if (!q.contains(a | t)) return false;
        if (t == 0) break;
      }
    }
  return true;
}

bool brute_sea(const SetSystem& q, int m) {
  for (Mask a : q.members())
    for (Mask b : q.members())
      for (int e = 0; e < m; ++e) {
        if (!has(a ^ b, e)) continue;
        bool found = false;
        for (int f = 0; f < m && !found; ++f)
          if (has(a ^ b, f)) found = q.contains(a ^ (bit(e) | bit(f)));
        if (!found) return false;
      }
  return true;
}

bool brute_log_submodular(const RatPoly& w) {
  Mask full = w.ground().full();
  for (Mask s = 0; s <= full; ++s)
    for (Mask t = 0; t <= full; ++t)
      if (w.coeff(s) * w.coeff(t) < w.coeff(s & t) * w.coeff(s | t)) return false;
  return true;
}

SetSystem random_system(SplitMix64& g, int m) {
  std::vector<Mask> members;
  for (Mask s = 0; s <= low_mask(m); ++s)
    if (g.below(3) == 0) members.push_back(s);
  if (members.empty()) members.push_back(0);
  return sets(m, members);
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("support profile") {
  RatPoly w(GroundSet::numbered(3), {{1, Rat(2)}, {7, Rat(1)}});
  auto p = support(w);
  CHECK(p.r == 3);
  CHECK(p.s == 1);
  CHECK(p.support.size() == 2);
  CHECK_THROWS_AS(support(RatPoly(GroundSet::numbered(2))), InputError);
  CHECK_THROWS_AS(support(RatPoly(GroundSet::numbered(2), {{1, Rat(-1)}})), InputError);
}

TEST_CASE("convexity against brute force") {
  auto w = convexity_violation(sets(2, {0b00, 0b11}));
  REQUIRE(w.has_value());
  CHECK(w->s == 0);
  CHECK(w->s_prime == 3);
  CHECK(popcount(w->t) == 1);
  SplitMix64 g(1);
  for (int i = 0; i < 300; ++i) {
    int m = 1 + static_cast<int>(g.below(5));
    SetSystem q = random_system(g, m);
    CHECK(is_convex(q) == brute_convex(q));
  }
}

TEST_CASE("symmetric exchange against brute force") {
  auto w = sea_violation(sets(3, {0b001, 0b110}));
  REQUIRE(w.has_value());
  CHECK(sea_check(enumerate(graphic(Graph::complete(4)), Family::Bases)));
  SplitMix64 g(2);
  for (int i = 0; i < 300; ++i) {
    int m = 1 + static_cast<int>(g.below(5));
    SetSystem q = random_system(g, m);
    CHECK(sea_check(q) == brute_sea(q, m));
  }
}

TEST_CASE("log-submodularity against brute force") {
  SplitMix64 g(3);
  for (int i = 0; i < 200; ++i) {
    RatPoly w = testing::random_weights(g, 1 + static_cast<int>(g.below(5)), 70);
    CHECK(log_submodular_check(w) == brute_log_submodular(w));
  }
  RatMatrix a = {{Rat(4), Rat(-1), Rat(-2)}, {Rat(-1), Rat(5), Rat(-1)}, {Rat(-2), Rat(-1), Rat(6)}};
  CHECK(log_submodular_check(mmatrix_weights(a)));
}

TEST_CASE("flattening") {
  Matroid u = uniform(3, 2);
  RatPoly indep = model_poly(u, Model::independent()).rat();
  Flattening f = flatten(indep);
  CHECK(f.l == 2);
  CHECK(f.r == 2);
  CHECK(f.s == 0);
  CHECK(f.ground.size() == 5);
  CHECK(f.exchange_ok());
  // Every flattened member has size r.
  for (Mask s : f.members.members()) CHECK(popcount(s) == 2);
  // Fresh labels avoid the originals.
  CHECK(f.ground.label(3) == "_1");
  // Homogeneous input is unchanged.
  RatPoly bases = model_poly(u, Model::bases()).rat();
  CHECK(flatten(bases).l == 0);
  CHECK_FALSE(flatten(sets(3, {0b001, 0b110})).exchange_ok());
}

TEST_CASE("layers of an independence system") {
  auto ls = layers(enumerate(graphic(Graph::complete(4)), Family::Independent));
  REQUIRE(ls.size() == 4);
  CHECK(ls[3].members.size() == 16);
  for (const auto& l : ls) CHECK(l.exchange_ok());
}

TEST_CASE("exchange properties") {
  auto props = exchange_props_check(enumerate(uniform(4, 2), Family::Independent));
  CHECK_FALSE(props.vacuous);
  CHECK(props.all_hold());
  CHECK(props.results.size() == 6);
  CHECK(exchange_props_check(sets(3, {0b000, 0b011})).vacuous);
}

TEST_CASE("support suite on Rayleigh inputs") {
  Matroid k4 = graphic(Graph::complete(4));
  for (const Model& model : {Model::bases(), Model::independent(), Model::spanning()}) {
    for (const auto& r : support_suite(model_poly(k4, model).rat())) {
      INFO(r.name << ": " << r.detail);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("support suite flags a non-convex support") {
  RatPoly w(GroundSet::numbered(2), {{0, Rat(1)}, {3, Rat(1)}});
  bool convex = true;
  for (const auto& r : support_suite(w))
    if (r.name == "convex") convex = r.holds;
  CHECK_FALSE(convex);
}

TEST_CASE("flattened exchangeable equivalence") {
  for (int m = 2; m <= 5; ++m)
    for (int r = 1; r < m; ++r) {
      auto res = flattened_exchangeable(model_poly(uniform(m, r), Model::independent()).rat());
      CHECK(res.applicable);
      CHECK(res.holds);
    }
}

}  // TEST_SUITE
