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
#include "rforge/sequences.hpp"
#include "support.hpp"

using namespace rforge;

namespace {

bool holds(const Seq& s, Condition c) { return check_condition(s, c).holds; }

std::vector<Rat> poly_from_roots(const std::vector<Rat>& negated_roots) {
  std::vector<Rat> c{Rat(1)};
  for (const Rat& r : negated_roots) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * r;
      next[i + 1] += c[i];
    }
    c = next;
  }
  return c;
}

Seq random_seq(SplitMix64& g) {
  std::size_t n = 1 + g.below(8);
  std::vector<Rat> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Rat(static_cast<long>(g.below(4) == 0 ? 0 : g.below(30))));
  return Seq(v, static_cast<int>(n - 1 + g.below(3)));
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("binomial rows satisfy every condition") {
  Seq row({Rat(1), Rat(4), Rat(6), Rat(4), Rat(1)}, 4);
  for (Condition c : kAllConditions) CHECK(holds(row, c));
}

TEST_CASE("internal zero") {
  Seq s({Rat(1), Rat(0), Rat(1)});
  CHECK_FALSE(holds(s, Condition::A0));
  CHECK(check_condition(s, Condition::A0).witness == 1);
  CHECK_FALSE(holds(s, Condition::A2));
  CHECK_FALSE(holds(s, Condition::A1));
  // Zeros at the ends are not internal.
  CHECK(holds(Seq({Rat(0), Rat(2), Rat(3), Rat(0)}), Condition::A0));
}

TEST_CASE("unimodality allows plateaus") {
  CHECK(holds(Seq({Rat(1), Rat(2), Rat(2), Rat(1)}), Condition::A1));
  CHECK(holds(Seq({Rat(3), Rat(3), Rat(3)}), Condition::A1));
  CHECK_FALSE(holds(Seq({Rat(2), Rat(1), Rat(2)}), Condition::A1));
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(check_condition(Seq({Rat(1), Rat(2)}), Condition::A4), InputError);
  CHECK_THROWS_AS(check_condition(Seq({Rat(1), Rat(-2)}), Condition::A2), InputError);
  CHECK_THROWS_AS(parse_condition("a9"), InputError);
  CHECK(parse_condition("a-3") == Condition::A3);
  CHECK(parse_condition("a5") == Condition::A5);
}

TEST_CASE("exchangeable sextic boundaries") {
  auto seq = [](const Rat& g) { return Seq({Rat(1), Rat(12), Rat(60), Rat(20) * g, Rat(60), Rat(12), Rat(1)}, 6); };
  CHECK(holds(seq(Rat(4)), Condition::A4));
  CHECK(holds(seq(Rat(8)), Condition::A4));
  CHECK_FALSE(holds(seq(Rat(399, 100)), Condition::A4));
  CHECK_FALSE(holds(seq(Rat(801, 100)), Condition::A4));
  CHECK(holds(seq(Rat(3)), Condition::A2));
  CHECK(holds(seq(Rat(15)), Condition::A2));
  CHECK_FALSE(holds(seq(Rat(299, 100)), Condition::A2));
  CHECK_FALSE(holds(seq(Rat(1501, 100)), Condition::A2));
  CHECK(holds(seq(Rat(3)), Condition::A1));
  CHECK_FALSE(holds(seq(Rat(299, 100)), Condition::A1));
  CHECK_FALSE(holds(seq(Rat(0)), Condition::A0));
  CHECK(holds(seq(Rat(1, 100)), Condition::A0));
}

TEST_CASE("log-concavity matches the oracle") {
  SplitMix64 g(77);
  for (int i = 0; i < 500; ++i) {
    Seq s = random_seq(g);
    bool lc = testing::is_log_concave_no_internal_zeros(s.entries);
    CHECK(lc == (holds(s, Condition::A2) && holds(s, Condition::A0)));
  }
}

TEST_CASE("implication ladder") {
  SplitMix64 g(78);
  for (int i = 0; i < 1000; ++i) {
    Seq s = random_seq(g);
    bool a[7];
    for (int k = 0; k < 7; ++k) a[k] = holds(s, kAllConditions[k]);
    if (a[5]) CHECK((a[4] && a[3] && a[2]));
    if (a[2] && a[0]) CHECK(a[1]);
    if (a[6]) CHECK((a[5] && a[0]));
  }
}

TEST_CASE("real-rootedness of products of linear factors") {
  SplitMix64 g(79);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> roots;
    std::size_t n = 1 + g.below(6);
    for (std::size_t k = 0; k < n; ++k) roots.push_back(Rat(static_cast<long>(g.below(5)), 1 + static_cast<long>(g.below(3))));
    auto c = poly_from_roots(roots);
    CHECK(real_nonpositive_rooted(IntPoly(c)));
    CHECK(holds(Seq(c), Condition::A6));
  }
  // t^2 + 1 and t^2 + t + 1 have no real roots; t^2 - 1 has a positive one.
  CHECK_FALSE(real_nonpositive_rooted(IntPoly({Rat(1), Rat(0), Rat(1)})));
  CHECK_FALSE(real_nonpositive_rooted(IntPoly({Rat(1), Rat(1), Rat(1)})));
  CHECK_FALSE(real_nonpositive_rooted(IntPoly({Rat(-1), Rat(0), Rat(1)})));
}

TEST_CASE("sturm counts distinct roots") {
  // (t - 1)(t - 2)(t + 3)^2
  IntPoly p = IntPoly({Rat(-1), Rat(1)}) * IntPoly({Rat(-2), Rat(1)}) * IntPoly({Rat(3), Rat(1)}) * IntPoly({Rat(3), Rat(1)});
  CHECK(sturm_real_roots(p) == 3);
  CHECK(sturm_real_roots(p, Rat(0)) == 2);
  CHECK(sturm_real_roots(p, std::nullopt, Rat(0)) == 1);
  CHECK(sturm_real_roots(p, Rat(1), Rat(2)) == 1);
  CHECK_THROWS_AS(sturm_real_roots(IntPoly()), InputError);
  auto [quo, rem] = IntPoly::divmod(p, IntPoly({Rat(3), Rat(1)}));
  CHECK(rem.is_zero());
  CHECK(IntPoly::gcd(p, p.derivative()) == IntPoly({Rat(3), Rat(1)}));
}

TEST_CASE("convolution identity") {
  SplitMix64 g(80);
  for (int i = 0; i < 200; ++i) {
    Seq a = random_seq(g), b = random_seq(g);
    Seq c = convolve(a, b);
    for (int n = 1; n <= a.last(); ++n) {
      auto id = convolution_identity(a, b, n);
      CHECK(id.equal);
      CHECK(id.lhs == id.rhs);
      // Direct oracle for c_n.
      Rat cn(0);
      for (int k = 0; k <= b.last(); ++k) cn += a.at(n + k) * b.at(k);
      CHECK(c.at(n) == cn);
    }
    if (testing::is_log_concave_no_internal_zeros(a.entries) && testing::is_log_concave_no_internal_zeros(b.entries))
      CHECK(testing::is_log_concave_no_internal_zeros(c.entries));
  }
}

TEST_CASE("mason report") {
  auto k4 = mason_report(graphic(Graph::complete(4)));
  CHECK(k4.all_pass());
  CHECK(k4.seqs.independent.size() == 4);
  bool i5 = true;
  for (const auto& [name, res] : k4.independent)
    if (name == "I5") i5 = res.holds;
  CHECK_FALSE(i5);
  for (int m = 2; m <= 6; ++m) CHECK(mason_report(uniform(m, m / 2)).all_pass());
  CHECK_FALSE(mason_report(uniform(6, 3)).h_normalized_nonincreasing.holds);
  auto u32 = mason_report(uniform(3, 2));
  CHECK(u32.h_logconcave.holds);
  CHECK(u32.h_normalized_nonincreasing.holds);
}

}  // TEST_SUITE
