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
#include "rforge/linalg.hpp"
#include "rforge/polynomial.hpp"
#include "support.hpp"

using namespace rforge;
using testing::positive_point;
using testing::random_weights;

namespace {

Point drop(const Point& p, Mask removed) {
  Point out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!has(removed, static_cast<int>(i))) out.push_back(p[i]);
  return out;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("mask packing") {
  CHECK(compress(0b1011, 0b0010) == 0b101);
  CHECK(expand(0b101, 0b0010) == 0b1001);
  for (Mask m = 0; m < 64; ++m) CHECK(compress(expand(m, 0b10100), 0b10100) == m);
}

TEST_CASE("slices decompose Z") {
  SplitMix64 g(3);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 2 + static_cast<int>(g.below(5));
    RatPoly z = random_weights(g, m);
    Point p = positive_point(g, m);
    int e = static_cast<int>(g.below(static_cast<std::size_t>(m)));
    Point rest = drop(p, bit(e));
    // Z = Z^e + y_e Z_e
    CHECK(z.eval(p) == z.deletion(e).eval(rest) + p[static_cast<std::size_t>(e)] * z.contraction(e).eval(rest));
    CHECK(z.slice(bit(e), 0) == z.contraction(e));
    CHECK(dualize(dualize(z)) == z);
  }
  RatPoly z(GroundSet::numbered(3));
  CHECK_THROWS_AS(z.slice(1, 1), InputError);
  CHECK_THROWS_AS(z.add_term(8, Rat(1)), InputError);
}

TEST_CASE("partial evaluation and embedding") {
  SplitMix64 g(8);
  RatPoly z = random_weights(g, 5);
  Point p = positive_point(g, 5);
  RatPoly half = z.partial_eval(0b00101, p);
  CHECK(half.ground().labels() == std::vector<std::string>{"2", "4", "5"});
  CHECK(half.eval(drop(p, 0b00101)) == z.eval(p));

  GroundSet bigger({"9", "5", "1", "2", "3", "4"});
  RatPoly emb = z.embed(bigger);
  Point q{Rat(0), p[4], p[0], p[1], p[2], p[3]};
  CHECK(emb.eval(q) == z.eval(p));
}

TEST_CASE("rayleigh difference matches pinned evaluation") {
  SplitMix64 g(17);
  for (int trial = 0; trial < 80; ++trial) {
    int m = 2 + static_cast<int>(g.below(5));
    RatPoly z = random_weights(g, m, 60);
    int e = static_cast<int>(g.below(static_cast<std::size_t>(m)));
    int f = static_cast<int>(g.below(static_cast<std::size_t>(m - 1)));
    if (f >= e) ++f;
    Point p = positive_point(g, m);
    RatQuad d = rayleigh_diff(z, e, f);
    CHECK(d.eval(drop(p, bit(e) | bit(f))) == testing::rayleigh_by_pinning(z, e, f, p));
  }
  CHECK_THROWS_AS(rayleigh_diff(RatPoly(GroundSet::numbered(3)), 1, 1), InputError);
}

TEST_CASE("theta is the linear coefficient in y_g") {
  SplitMix64 g(23);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 3 + static_cast<int>(g.below(4));
    RatPoly z = random_weights(g, m, 60);
    Point p = positive_point(g, m);
    const int e = 0, f = 1, gg = 2;
    auto delta_at = [&](int v) {
      Point q = p;
      q[gg] = Rat(v);
      return testing::rayleigh_by_pinning(z, e, f, q);
    };
    Rat c2 = (delta_at(2) - Rat(2) * delta_at(1) + delta_at(0)) / Rat(2);
    Rat c1 = delta_at(1) - delta_at(0) - c2;
    CHECK(theta(z, e, f, gg).eval(drop(p, 0b111)) == c1);
  }
}

TEST_CASE("theta decomposition") {
  // Delta{e,f} = Delta^g + y_g Theta + y_g^2 Delta_g, evaluated at random points.
  SplitMix64 g(29);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 3 + static_cast<int>(g.below(4));
    RatPoly z = random_weights(g, m, 60);
    Point p = positive_point(g, m);
    Point rest = drop(p, 0b111);
    Rat yg = p[2];
    Rat lhs = testing::rayleigh_by_pinning(z, 0, 1, p);
    Rat rhs = rayleigh_diff(z.deletion(2), 0, 1).eval(rest) + yg * theta(z, 0, 1, 2).eval(rest) +
              yg * yg * rayleigh_diff(z.contraction(2), 0, 1).eval(rest);
    CHECK(lhs == rhs);
  }
  // y1 + y2 + y3: Delta{1,2} = 1 for every y3, so Theta vanishes.
  RatPoly b(GroundSet::numbered(3), {{1, Rat(1)}, {2, Rat(1)}, {4, Rat(1)}});
  CHECK(theta(b, 0, 1, 2).is_zero());
  CHECK(rayleigh_diff(b.deletion(2), 0, 1).coeff(QuadMono{}) == Rat(1));
  CHECK(rayleigh_diff(b.contraction(2), 0, 1).is_zero());
  // (1 + y1)(1 + y2)(1 + y3)
  RatPoly prod(GroundSet::numbered(3));
  for (Mask s = 0; s < 8; ++s) prod.add_term(s, Rat(1));
  CHECK(theta(prod, 0, 1, 2).is_zero());
  CHECK(rayleigh_diff(prod, 0, 1).is_zero());
}

TEST_CASE("exchangeable coefficients") {
  SymSeq a({Rat(1), Rat(3), Rat(2), Rat(5)});
  RatPoly z = a.to_poly(GroundSet::numbered(3));
  CHECK(z.size() == 8);
  CHECK(exchangeable_coefficients(z) == a);
  CHECK(symmetrize(z) == a);
  z.add_term(0b001, Rat(1));
  CHECK_THROWS_AS(exchangeable_coefficients(z), InputError);
  // Symmetrization averages over each level.
  RatPoly w(GroundSet::numbered(2), {{0, Rat(1)}, {1, Rat(2)}, {3, Rat(1)}});
  CHECK(symmetrize(w) == SymSeq({Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("elementary symmetric values") {
  auto e = elementary_symmetric({Rat(1), Rat(2), Rat(3)});
  CHECK(e == std::vector<Rat>{Rat(1), Rat(6), Rat(11), Rat(6)});
}

TEST_CASE("monomial symmetric expansion round trip") {
  SplitMix64 g(31);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 2 + static_cast<int>(g.below(4));
    std::vector<Rat> entries;
    for (int k = 0; k <= m + 2; ++k) entries.push_back(Rat(1 + static_cast<long>(g.below(9))));
    SymSeq a(entries);
    RatPoly z = a.to_poly(GroundSet::numbered(m + 2));
    RatQuad d = rayleigh_diff(z, 0, 1);
    CHECK(is_symmetric(d));
    auto ms = monomial_symmetric_expand(d);
    CHECK(monomial_symmetric_sum(d.ground(), ms) == d);
  }
  RatQuad asym(GroundSet::numbered(2));
  asym.add_term(QuadMono{1, 0}, Rat(1));
  CHECK_FALSE(is_symmetric(asym));
  CHECK_THROWS_AS(monomial_symmetric_expand(asym), InputError);
}

TEST_CASE("quadratic products") {
  GroundSet gs = GroundSet::numbered(2);
  RatPoly a(gs, {{0, Rat(1)}, {1, Rat(1)}});  // 1 + y1
  RatQuad sq = multiply(a, a);                // 1 + 2 y1 + y1^2
  CHECK(sq.coeff(QuadMono{1, 1}) == Rat(1));
  CHECK(sq.coeff(QuadMono{1, 0}) == Rat(2));
  CHECK_THROWS_AS(sq * sq, InputError);
  CHECK_THROWS_AS(sq.contraction(0), InputError);
  CHECK(sq.deletion(0).coeff(QuadMono{0, 0}) == Rat(1));
}

TEST_CASE("principal minors of an M-matrix") {
  RatMatrix a = {{Rat(3), Rat(-1), Rat(0)}, {Rat(-1), Rat(3), Rat(-1)}, {Rat(0), Rat(-1), Rat(3)}};
  RatPoly w = mmatrix_weights(a);
  for (Mask s = 0; s < 8; ++s) CHECK(w.coeff(s) == testing::cofactor_det(principal_submatrix(a, s)));
  CHECK(w.coeff(7) == Rat(21));
  RatMatrix bad = {{Rat(1), Rat(2)}, {Rat(2), Rat(1)}};
  CHECK_THROWS_AS(mmatrix_weights(bad), InputError);
  RatMatrix asym = {{Rat(2), Rat(-1)}, {Rat(0), Rat(2)}};
  CHECK_THROWS_AS(mmatrix_weights(asym), InputError);
}

TEST_CASE("linear algebra against cofactor expansion") {
  SplitMix64 g(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + g.below(5);
    RatMatrix a(n, std::vector<Rat>(n));
    for (auto& row : a)
      for (auto& x : row) x = testing::small_rat(g, 3);
    Rat det = testing::cofactor_det(a);
    CHECK(determinant(a) == det);
    auto inv = inverse(a);
    CHECK(inv.has_value() == !det.is_zero());
    // det(tI - A) at t = 0 is (-1)^n det A.
    auto cp = characteristic_polynomial(a);
    CHECK(cp.back() == Rat(1));
    CHECK(cp.front() == (n % 2 == 0 ? det : -det));
  }
}

TEST_CASE("explicit weights") {
  GroundSet gs = GroundSet::numbered(2);
  CHECK_THROWS_AS(from_weights(gs, {{1, Rat(-1)}}), InputError);
  CHECK_THROWS_AS(from_weights(gs, {{1, Rat(0)}}), InputError);
  CHECK(from_weights(gs, {{3, Rat(2)}}).coeff(3) == Rat(2));
}

}  // TEST_SUITE
