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
#include "support.hpp"

using namespace rforge;

TEST_SUITE("potts") {

TEST_CASE("symbolic coefficients are q to minus the rank") {
  Graph k4 = Graph::complete(4);
  LaurentPoly z = potts_symbolic(graphic(k4));
  CHECK(z.size() == 64);
  for (const auto& [s, c] : z.terms()) CHECK(c == LaurentQ::monomial(-testing::forest_rank(k4, s)));
  for (int m = 1; m <= 6; ++m)
    for (int r = 0; r <= m; ++r) {
      LaurentPoly u = potts_symbolic(uniform(m, r));
      for (const auto& [s, c] : u.terms()) CHECK(c == LaurentQ::monomial(-std::min(r, popcount(s))));
    }
}

TEST_CASE("evaluation commutes with construction") {
  Matroid m = graphic(Graph::cycle(4));
  for (const Rat& q : {Rat(1, 3), Rat(2), Rat(1)}) {
    CHECK(eval_q(potts_symbolic(m), q) == potts_evaluated(m, q));
  }
  // At q = 1 every subset has weight one.
  RatPoly one = potts_evaluated(uniform(4, 2), Rat(1));
  CHECK(one.eval(Point(4, Rat(1))) == Rat(16));
  SymSeq seq = uniform_potts_sequence(4, 2, Rat(1, 2));
  CHECK(seq == SymSeq({Rat(1), Rat(2), Rat(4), Rat(4), Rat(4)}));
}

TEST_CASE("model polynomials") {
  Matroid k4 = graphic(Graph::complete(4));
  CHECK(model_poly(k4, Model::bases()).rat().size() == 16);
  CHECK(model_poly(k4, Model::independent()).rat().size() == 38);
  CHECK(model_poly(k4, Model::spanning()).rat().grading().back() == Rat(1));
  CHECK(model_poly(k4, Model::potts_symbolic()).symbolic());
  CHECK_FALSE(model_poly(k4, Model::potts_at(Rat(1, 2))).symbolic());
  CHECK(Model::parse("indep") == Model::independent());
  CHECK(Model::parse("potts", Rat(1, 2)) == Model::potts_at(Rat(1, 2)));
  CHECK_THROWS_AS(Model::parse("nonsense"), InputError);
}

TEST_CASE("dominant supports") {
  Matroid m = graphic(Graph::complete(4));
  CHECK(dominant_support(m, 0) == enumerate(m, Family::Spanning));
  CHECK(dominant_support(m, 1) == enumerate(m, Family::Bases));
  CHECK(dominant_support(m, 2) == enumerate(m, Family::Independent));
}

TEST_CASE("slice identities along every element") {
  for (const Matroid& m : {graphic(Graph::complete(4)), uniform(5, 2), uniform(3, 3), uniform(3, 0)})
    for (int g = 0; g < m.size(); ++g) {
      PottsSlices s = potts_slices(m, g, 7, 30);
      CHECK(s.all_hold());
      CHECK(s.coloop == m.is_coloop(g));
      CHECK(s.loop == m.is_loop(g));
    }
}

TEST_CASE("two-sum composition matches the direct two-sum") {
  Matroid l = relabel(graphic(Graph::complete(4)), GroundSet({"a", "b", "c", "d", "e", "g"}));
  Matroid r = relabel(uniform(3, 2), GroundSet({"g", "x", "z"}));
  Matroid direct = two_sum(l, r, "g");
  for (const Model& model : {Model::bases(), Model::independent(), Model::spanning(), Model::potts_symbolic(),
                             Model::potts_at(Rat(1, 2))}) {
    PartitionPoly composed = twosum_compose(model_poly(l, model), model_poly(r, model), "g", model);
    PartitionPoly want = model_poly(direct, model);
    if (model.symbolic())
      CHECK(composed.laurent().embed(want.ground()) == want.laurent());
    else
      CHECK(composed.rat().embed(want.ground()) == want.rat());
  }
  CHECK_THROWS(twosum_compose(model_poly(l, Model::potts_at(Rat(1))), model_poly(r, Model::potts_at(Rat(1))), "g",
                              Model::potts_at(Rat(1))));
}

}  // TEST_SUITE
