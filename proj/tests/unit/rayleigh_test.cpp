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
#include "rforge/rayleigh.hpp"
#include "support.hpp"

using namespace rforge;

namespace {

RatPoly k4_bases() { return model_poly(graphic(Graph::complete(4)), Model::bases()).rat(); }

/// Cov(X_e, X_f) by summing over the support.
Rat direct_covariance(const RatPoly& z, int e, int f, const Point& y) {
  Rat total(0), pe(0), pf(0), pef(0);
  for (const auto& [s, w] : z.terms()) {
    Rat mass = w;
    for (int i = 0; i < z.ground().size(); ++i)
      if (has(s, i)) mass *= y[static_cast<std::size_t>(i)];
    total += mass;
    if (has(s, e)) pe += mass;
    if (has(s, f)) pf += mass;
    if (has(s, e) && has(s, f)) pef += mass;
  }
  return pef / total - (pe / total) * (pf / total);
}

}  // namespace

TEST_SUITE("rayleigh") {

TEST_CASE("spanning trees of K4 are Rayleigh") {
  RatPoly z = k4_bases();
  // Edges 1 and 2 share a vertex: coefficientwise.
  CHECK(check_pair(z, 0, 1, Strategy::coeff()).status == Status::Verified);
  // Disjoint edges need a square.
  CHECK(check_pair(z, 0, 5, Strategy::coeff()).status == Status::Inconclusive);
  SquareCertificate cert{{{Rat(1), {"2", "5"}, {"3", "4"}}}};
  RatQuad rest = rayleigh_diff(z, 0, 5) - cert.to_poly(z.ground().without(bit(0) | bit(5)));
  CHECK(coefficients_nonnegative(rest));
  auto v = check_pair(z, 0, 5, Strategy::certificate({{{0, 5}, cert}}));
  CHECK(v.status == Status::Verified);
  CHECK(v.method == "certificate");
}

TEST_CASE("bad certificates") {
  GroundSet gs = GroundSet::numbered(4);
  CHECK_THROWS_AS((SquareCertificate{{{Rat(0), {"1"}, {"2"}}}}.to_poly(gs)), InputError);
  CHECK_THROWS_AS((SquareCertificate{{{Rat(1), {"1"}, {"1"}}}}.to_poly(gs)), InputError);
  CHECK_THROWS_AS((SquareCertificate{{{Rat(1), {"9"}, {"1"}}}}.to_poly(gs)), InputError);
}

TEST_CASE("a refuted pair carries an exact witness") {
  RatPoly z(GroundSet::numbered(2), {{0, Rat(1)}, {3, Rat(1)}});  // 1 + y1 y2
  auto v = check_pair(z, 0, 1, Strategy::sample(200, 3));
  REQUIRE(v.status == Status::Refuted);
  REQUIRE(v.value.has_value());
  CHECK(v.value->sign() < 0);
  CHECK(testing::rayleigh_by_pinning(z, 0, 1, v.witness) == *v.value);
  CHECK(check_pair(z, 0, 1, Strategy::coeff()).status != Status::Verified);
}

TEST_CASE("rayleigh value and covariance") {
  SplitMix64 g(4);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 2 + static_cast<int>(g.below(4));
    RatPoly z = testing::random_weights(g, m, 70);
    Point y = testing::positive_point(g, m);
    CHECK(rayleigh_value(z, 0, 1, y) == testing::rayleigh_by_pinning(z, 0, 1, y));
    Rat zy = z.eval(y);
    if (zy.is_zero()) continue;
    CHECK(covariance(z, 0, 1, y) == direct_covariance(z, 0, 1, y));
    CHECK(covariance(z, 0, 1, y) == -(y[0] * y[1] / (zy * zy)) * rayleigh_value(z, 0, 1, y));
  }
}

TEST_CASE("check_all summary") {
  auto all = check_all(k4_bases(), Strategy::coeff());
  CHECK(all.pairs.size() == 15);
  CHECK(all.summary == Status::Inconclusive);
}

TEST_CASE("exchangeable sequences") {
  // Uniform Potts at q < 1 is Rayleigh, at q = 2 it is not.
  CHECK(exchangeable_check(uniform_potts_sequence(5, 2, Rat(1, 2))).status == Status::Verified);
  auto bad = exchangeable_check(uniform_potts_sequence(5, 2, Rat(2)));
  CHECK(bad.status == Status::Refuted);
  REQUIRE(bad.index.has_value());
  auto gap = exchangeable_check(SymSeq({Rat(1), Rat(0), Rat(1)}));
  CHECK(gap.status == Status::Refuted);
}

TEST_CASE("diagonal difference of the gamma family") {
  // Hand expansion for (1,2,4,gamma,4,2,1): the constant term vanishes
  // because a_1^2 = a_0 a_2.
  for (const Rat& gm : {Rat(3), Rat(5), Rat(262, 100)}) {
    SymSeq a({Rat(1), Rat(2), Rat(4), gm, Rat(4), Rat(2), Rat(1)});
    auto d = diagonal_delta(a);
    REQUIRE(d.size() >= 5);
    CHECK(d[0] == Rat(0));
    CHECK(d[1] == Rat(32) - Rat(4) * gm);
    CHECK(d[2] == Rat(136) - Rat(8) * gm);
    CHECK(d[3] == Rat(80) * gm - Rat(136));
    CHECK(d[4] == Rat(20) * gm * gm - Rat(137));
    RatPoly z = a.to_poly(GroundSet::numbered(6));
    for (long t = 1; t <= 4; ++t) {
      Rat acc(0), tp(1);
      for (const Rat& c : d) {
        acc += c * tp;
        tp *= Rat(t);
      }
      CHECK(acc == testing::rayleigh_by_pinning(z, 0, 1, Point(6, Rat(t))));
    }
  }
}

TEST_CASE("exchangeable delta agrees with the polynomial") {
  SplitMix64 g(12);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 2 + static_cast<int>(g.below(5));
    std::vector<Rat> a;
    for (int k = 0; k <= m; ++k) a.push_back(Rat(static_cast<long>(g.below(6))));
    SymSeq seq(a);
    Point y = testing::positive_point(g, m);
    std::vector<Rat> rest(y.begin() + 2, y.end());
    CHECK(exchangeable_delta(seq, rest) == testing::rayleigh_by_pinning(seq.to_poly(GroundSet::numbered(m)), 0, 1, y));
  }
}

TEST_CASE("negative association of a product measure") {
  // Independent coordinates: every covariance vanishes.
  RatPoly z(GroundSet::numbered(4));
  for (Mask s = 0; s < 16; ++s) z.add_term(s, Rat(1));
  auto rep = negative_association_check(z, 0b0011, 0b1100, Point(4, Rat(2)));
  CHECK(rep.pairs_checked > 0);
  CHECK(rep.violations == 0);
  CHECK(rep.max_excess == Rat(0));
  // Positively correlated pair.
  RatPoly bad(GroundSet::numbered(2), {{0, Rat(1)}, {3, Rat(1)}});
  CHECK(negative_association_check(bad, 0b01, 0b10, Point(2, Rat(1))).violations > 0);
}

TEST_CASE("triple condition on K4") {
  auto rep = triple_condition_check(k4_bases(), 0, 1, 2, 20, true, 5);
  CHECK(rep.points == 20);
  CHECK(rep.violations == 0);
}

TEST_CASE("negative terms") {
  RatPoly z(GroundSet::numbered(3), {{0, Rat(1)}, {3, Rat(1)}, {4, Rat(1)}});
  auto neg = negative_terms(z, 0, 1);
  // Delta = -(1 + y3).
  REQUIRE(neg.size() == 2);
  CHECK(neg[0].second == Rat(-1));
  CHECK(negative_terms(k4_bases(), 0, 1).empty());
}

TEST_CASE("symmetrization") {
  auto rep = symmetrize_and_check(k4_bases());
  CHECK(rep.seq.m == 6);
  CHECK(rep.seq.a[3] == Rat(16, 20));
}

}  // TEST_SUITE
