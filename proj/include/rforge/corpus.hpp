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


// Built-in regression corpus: small uniform and graphic matroids, their
// two-sums, weight functions derived from them, and the named checks run by
// `rayleigh-forge corpus`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rforge/io.hpp"
#include "rforge/matroid.hpp"
#include "rforge/rayleigh.hpp"

namespace rforge {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

/// U(m,r) for 1 <= m <= max_m and 0 <= r <= m.
std::vector<NamedMatroid> uniform_corpus(int max_m = 6);

struct NamedGraph {
  std::string name;
  Graph graph;
};
/// Connected graphs on at most five vertices, edges labeled 1, 2, ...
std::vector<NamedGraph> graph_corpus();
std::vector<NamedMatroid> graphic_corpus();

struct TwoSumCase {
  std::string name;
  Matroid left;   // elements l<label> and g
  Matroid right;  // elements r<label> and g
  std::string glue = "g";
};

/// Relabels both sides apart and glues element `a_elem` of `a` to `b_elem`
/// of `b`.
TwoSumCase glue_pair(const NamedMatroid& a, int a_elem, const NamedMatroid& b, int b_elem);

/// `count` random gluings of corpus matroids with at most `max_size`
/// elements in the result.
std::vector<TwoSumCase> two_sum_corpus(std::uint64_t seed, int count, int max_size = 10);

struct NamedWeight {
  std::string name;
  RatPoly omega;
};

/// Bases, independent-set and spanning-set polynomials of the corpus,
/// Potts polynomials at q = 1/2, M-matrix and forest weights, and a few
/// non-Rayleigh controls.
std::vector<NamedWeight> weight_corpus(std::uint64_t seed);

/// Random symmetric 0/1-pattern M-matrix with positive principal minors.
RatMatrix random_mmatrix(SplitMix64& g, int n);

struct CaseResult {
  std::string name;
  Status status = Status::Verified;  // Verified = passed
  json detail;
};

struct CorpusOptions {
  std::vector<std::string> only;
  std::vector<NamedWeight> extra_weights;
  std::uint64_t seed = kDefaultSeed;
};

struct CorpusReport {
  std::vector<CaseResult> cases;
  Status summary = Status::Verified;
};

std::vector<std::string> corpus_case_names();
/// Throws InputError on an unknown --only name.
CorpusReport run_corpus(const CorpusOptions& options);

/// Equality of polynomials whose ground sets hold the same labels in any order.
template <class P>
bool same_up_to_order(const P& a, const P& b) {
  if (a.ground() == b.ground()) return a == b;
  if (a.ground().size() != b.ground().size()) return false;
  for (const auto& l : a.ground().labels())
    if (!b.ground().find(l)) return false;
  return a.embed(b.ground()) == b;
}

}  // namespace rforge
