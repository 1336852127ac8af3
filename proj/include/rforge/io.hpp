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


// File formats, matroid specifications and JSON serialization.
//
//   graph:       `graph <n>` then `<u> <v> <label>` per edge (0-based vertices)
//   bases:       `elements: a,b,c` then one comma-separated basis per line
//   weights:     `elements: a,b,c` then `S : p/q` per line, `-` for the empty set
//   certificate: `lambda p/q : A | B` per line; optional `pair e,f` headers
//
// Blank lines and lines starting with '#' are ignored everywhere.

#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rforge/matroid.hpp"
#include "rforge/polynomial.hpp"
#include "rforge/potts.hpp"
#include "rforge/rayleigh.hpp"
#include "rforge/sequences.hpp"

namespace rforge {

using json = nlohmann::ordered_json;

Graph parse_graph(std::istream& in);
SetSystem parse_bases(std::istream& in);
RatPoly parse_weights(std::istream& in);

struct CertificateFile {
  SquareCertificate unkeyed;  // lines before any `pair` header
  std::map<std::pair<std::string, std::string>, SquareCertificate> keyed;
};
CertificateFile parse_certificate(std::istream& in);

enum class InputKind { Graph, Bases, Weights };

struct LoadedInput {
  InputKind kind = InputKind::Weights;
  std::string text;  // raw bytes, for digests
  std::optional<Graph> graph;
  std::optional<Matroid> matroid;
  std::optional<RatPoly> weights;
};

/// Reads a file and classifies it by its first significant line.
LoadedInput load_file(const std::string& path);

/// U(m,r), uniform:m,r, K<n>, C<n>, or a graph or bases file.
Matroid load_matroid(const std::string& spec, std::string* digest_source = nullptr);

std::vector<Rat> parse_rat_list(const std::string& csv);
std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

json to_json(const Rat& r);
json to_json(const LaurentQ& q);
json to_json(const GroundSet& g, Mask s);
json to_json(const RatPoly& p);
json to_json(const LaurentPoly& p);
json to_json(const RatQuad& p);
json to_json(const SetSystem& q);
json to_json(const PartitionPoly& p);
json to_json(const RayleighVerdict& v, const GroundSet& g);
json to_json(const ConditionResult& r);

std::string sha256_hex(const std::string& data);

}  // namespace rforge
