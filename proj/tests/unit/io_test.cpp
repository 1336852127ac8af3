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


#include <sstream>

#include "doctest.h"
#include "rforge/io.hpp"

using namespace rforge;

namespace {

std::string data(const std::string& name) { return std::string(RFORGE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph files") {
  std::istringstream in("# triangle\ngraph 3\n0 1 a\n\n1 2 b\n0 2 c\n");
  Graph g = parse_graph(in);
  CHECK(g.n == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.edges[2].label == "c");
  std::istringstream loop("graph 2\n0 0 a\n");
  CHECK_THROWS_AS(parse_graph(loop), InputError);
  std::istringstream range("graph 2\n0 5 a\n");
  CHECK_THROWS_AS(parse_graph(range), InputError);
}

TEST_CASE("bases files") {
  std::istringstream in("elements: a,b,c\na,b\na,c\nb,c\n");
  SetSystem q = parse_bases(in);
  CHECK(q.size() == 3);
  CHECK(q.ground().labels() == std::vector<std::string>{"a", "b", "c"});
  std::istringstream unknown("elements: a,b\na,z\n");
  CHECK_THROWS_AS(parse_bases(unknown), InputError);
}

TEST_CASE("weights files") {
  std::istringstream in("elements: 1,2\n- : 1\n1 : 2\n2 : 2\n1,2 : 3\n");
  RatPoly w = parse_weights(in);
  CHECK(w.coeff(0) == Rat(1));
  CHECK(w.coeff(3) == Rat(3));
  std::istringstream bad("elements: 1,2\n1 : one half\n");
  CHECK_THROWS_AS(parse_weights(bad), InputError);
  std::istringstream neg("elements: 1\n1 : -1\n");
  CHECK_THROWS_AS(parse_weights(neg), InputError);
}

TEST_CASE("certificate files") {
  std::istringstream in("lambda 2 : a | b\npair 1,6\nlambda 1/2 : 2,5 | 3,4\n");
  CertificateFile c = parse_certificate(in);
  REQUIRE(c.unkeyed.terms.size() == 1);
  CHECK(c.unkeyed.terms[0].lambda == Rat(2));
  REQUIRE(c.keyed.count({"1", "6"}) == 1);
  CHECK(c.keyed.at({"1", "6"}).terms[0].b == std::vector<std::string>{"3", "4"});
  std::istringstream bad("lambda 1 : a b\n");
  CHECK_THROWS_AS(parse_certificate(bad), InputError);
}

TEST_CASE("file classification") {
  CHECK(load_file(data("k4.graph")).kind == InputKind::Graph);
  CHECK(load_file(data("tri1.bases")).kind == InputKind::Bases);
  CHECK(load_file(data("mmatrix.weights")).kind == InputKind::Weights);
  CHECK_THROWS_AS(load_file(data("corrupt.weights")), InputError);
  CHECK_THROWS_AS(load_file(data("missing.file")), InputError);
}

TEST_CASE("matroid specifications") {
  CHECK(load_matroid("U(5,2)").rank() == 2);
  CHECK(load_matroid("uniform:4,3").size() == 4);
  CHECK(load_matroid("K4").size() == 6);
  CHECK(load_matroid("C5").rank() == 4);
  std::string digest;
  CHECK(load_matroid(data("k4.graph"), &digest).size() == 6);
  CHECK_FALSE(digest.empty());
  CHECK_THROWS_AS(load_matroid("U(2,5)"), InputError);
  CHECK_THROWS_AS(load_matroid("Q7"), InputError);
}

TEST_CASE("text helpers") {
  CHECK(parse_rat_list("1, 1/2,3") == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(3)});
  CHECK(split("a,,b", ',').size() == 3);
  CHECK(trim("  x \t") == "x");
}

TEST_CASE("json encodings") {
  CHECK(to_json(Rat(-3, 4)) == "-3/4");
  json l = to_json(LaurentQ(-1, {Rat(1), Rat(0), Rat(2)}));
  CHECK(l["min_exp"] == -1);
  CHECK(l["coeffs"].size() == 3);
  RatPoly p(GroundSet({"a", "b"}), {{0, Rat(1)}, {3, Rat(1, 2)}});
  json jp = to_json(p);
  CHECK(jp.dump().find("1/2") != std::string::npos);
  CHECK(to_json(GroundSet({"a", "b"}), 2) == json::array({"b"}));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

}  // TEST_SUITE
