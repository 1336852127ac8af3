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
#include "json.hpp"
#include "rforge/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = rforge::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(RFORGE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CHECK(run({"seq", "check", "--values", "1,0,1"}).code == 1);
  CHECK(run({"seq", "check", "--values", "1,2,1"}).code == 0);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"rayleigh", "check", data("missing.graph")}).code == 3);
  CHECK(run({"rayleigh", "check", data("k4.graph"), "--model", "indep", "--strategy", "coeff"}).code == 2);
  CHECK(run({"rayleigh", "check", data("pathological.weights"), "--strategy", "sample", "--samples", "10"}).code == 1);
}

TEST_CASE("json report") {
  Run r = run({"--format", "json", "matroid", "info", "K4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["tool"] == "rayleigh-forge");
  CHECK(j["exit_code"] == 0);
  CHECK(j["seed"].is_string());
  CHECK(j.contains("timing"));
}

TEST_CASE("global options after the subcommand") {
  Run r = run({"seq", "check", "--values", "1,2,1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["command"][0] == "seq");
}

TEST_CASE("input digests") {
  Run r = run({"--format", "json", "rayleigh", "check", data("k4.graph"), "--pair", "1,2"});
  REQUIRE(r.code == 0);
  auto inputs = nlohmann::json::parse(r.out)["inputs"];
  REQUIRE(inputs.size() == 1);
  CHECK(inputs[0]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("same seed, same report") {
  std::vector<std::string> args{"--format", "json", "--seed", "0x2a", "probe", "conjecture", "K4", "--samples", "5"};
  auto a = nlohmann::json::parse(run(args).out);
  auto b = nlohmann::json::parse(run(args).out);
  a.erase("timing");
  b.erase("timing");
  CHECK(a == b);
  CHECK(a["seed"] == "0x2A");
}

}  // TEST_SUITE
