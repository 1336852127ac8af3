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


#include "rforge/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rforge/errors.hpp"

namespace rforge {

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> rows;  // (line number, trimmed text)
};

Lines significant_lines(std::istream& in) {
  Lines out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.rows.emplace_back(no, t);
  }
  return out;
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& s, int line) {
  int v = 0;
  auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) fail_at(line, "expected an integer, got '" + t + "'");
  return v;
}

GroundSet parse_elements_header(const Lines& lines) {
  if (lines.rows.empty()) throw InputError("empty file");
  const auto& [no, first] = lines.rows.front();
  if (first.rfind("elements:", 0) != 0) fail_at(no, "expected 'elements:' header");
  std::vector<std::string> labels;
  for (const auto& l : split(first.substr(9), ',')) {
    auto t = trim(l);
    if (t.empty()) fail_at(no, "empty element label");
    labels.push_back(t);
  }
  return GroundSet(std::move(labels));
}

Mask parse_label_set(const GroundSet& g, const std::string& text, int line) {
  std::string t = trim(text);
  if (t == "-" || t.empty()) return 0;
  Mask m = 0;
  for (const auto& l : split(t, ',')) {
    auto idx = g.find(trim(l));
    if (!idx) fail_at(line, "unknown element '" + trim(l) + "'");
    if (has(m, *idx)) fail_at(line, "repeated element '" + trim(l) + "'");
    m |= bit(*idx);
  }
  return m;
}

std::vector<std::string> parse_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string t = trim(text);
  if (t == "-" || t.empty()) return out;
  for (const auto& l : split(t, ',')) out.push_back(trim(l));
  return out;
}

}  // namespace

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  for (const auto& part : split(csv, ',')) out.push_back(Rat::parse(trim(part)));
  if (out.empty()) throw InputError("empty value list");
  return out;
}

Graph parse_graph(std::istream& in) {
  Lines lines = significant_lines(in);
  if (lines.rows.empty()) throw InputError("empty graph file");
  std::istringstream head(lines.rows.front().second);
  std::string word, n_text, extra;
  head >> word >> n_text;
  if (word != "graph" || n_text.empty() || (head >> extra)) fail_at(lines.rows.front().first, "expected 'graph <n>'");
  int n = parse_int(n_text, lines.rows.front().first);
  if (n < 1) fail_at(lines.rows.front().first, "graph needs at least one vertex");
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 1; i < lines.rows.size(); ++i) {
    const auto& [no, text] = lines.rows[i];
    std::istringstream row(text);
    std::string u, v, label;
    row >> u >> v >> label;
    if (label.empty() || (row >> extra)) fail_at(no, "expected '<u> <v> <label>'");
    edges.push_back({parse_int(u, no), parse_int(v, no), label});
  }
  return Graph(n, std::move(edges));
}

SetSystem parse_bases(std::istream& in) {
  Lines lines = significant_lines(in);
  GroundSet g = parse_elements_header(lines);
  std::vector<Mask> members;
  for (std::size_t i = 1; i < lines.rows.size(); ++i)
    members.push_back(parse_label_set(g, lines.rows[i].second, lines.rows[i].first));
  return SetSystem(g, std::move(members));
}

RatPoly parse_weights(std::istream& in) {
  Lines lines = significant_lines(in);
  GroundSet g = parse_elements_header(lines);
  std::map<Mask, Rat> w;
  for (std::size_t i = 1; i < lines.rows.size(); ++i) {
    const auto& [no, text] = lines.rows[i];
    auto colon = text.find(':');
    if (colon == std::string::npos) fail_at(no, "expected 'S : p/q'");
    Mask s = parse_label_set(g, text.substr(0, colon), no);
    Rat v;
    try {
      v = Rat::parse(trim(text.substr(colon + 1)));
    } catch (const InputError& e) {
      fail_at(no, e.what());
    }
    if (!w.emplace(s, v).second) fail_at(no, "repeated subset " + g.format(s));
  }
  return from_weights(g, w);
}

CertificateFile parse_certificate(std::istream& in) {
  Lines lines = significant_lines(in);
  CertificateFile out;
  SquareCertificate* current = &out.unkeyed;
  for (const auto& [no, text] : lines.rows) {
    if (text.rfind("pair", 0) == 0) {
      auto labels = parse_labels(text.substr(4));
      if (labels.size() != 2 || labels[0] == labels[1]) fail_at(no, "expected 'pair e,f'");
      current = &out.keyed[{labels[0], labels[1]}];
      continue;
    }
    if (text.rfind("lambda", 0) != 0) fail_at(no, "expected 'lambda p/q : A | B'");
    auto colon = text.find(':');
    auto bar = text.find('|');
    if (colon == std::string::npos || bar == std::string::npos || bar < colon) fail_at(no, "expected 'lambda p/q : A | B'");
    SquareCertificate::Term term;
    try {
      term.lambda = Rat::parse(trim(text.substr(6, colon - 6)));
    } catch (const InputError& e) {
      fail_at(no, e.what());
    }
    if (term.lambda.sign() <= 0) fail_at(no, "lambda must be positive");
    term.a = parse_labels(text.substr(colon + 1, bar - colon - 1));
    term.b = parse_labels(text.substr(bar + 1));
    current->terms.push_back(std::move(term));
  }
  return out;
}

LoadedInput load_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  LoadedInput out;
  out.text = buf.str();
  std::istringstream scan(out.text);
  Lines lines = significant_lines(scan);
  if (lines.rows.empty()) throw InputError("'" + path + "' is empty");
  const std::string& first = lines.rows.front().second;
  std::istringstream in(out.text);
  if (first.rfind("graph", 0) == 0) {
    out.kind = InputKind::Graph;
    out.graph = parse_graph(in);
    out.matroid = graphic(*out.graph);
  } else if (first.rfind("elements:", 0) == 0) {
    bool weights = false;
    for (std::size_t i = 1; i < lines.rows.size(); ++i) weights = weights || lines.rows[i].second.find(':') != std::string::npos;
    if (weights) {
      out.kind = InputKind::Weights;
      out.weights = parse_weights(in);
    } else {
      out.kind = InputKind::Bases;
      out.matroid = from_bases(parse_bases(in));
    }
  } else {
    fail_at(lines.rows.front().first, "unrecognized file; expected 'graph <n>' or 'elements:'");
  }
  return out;
}

Matroid load_matroid(const std::string& spec, std::string* digest_source) {
  auto two_ints = [&](const std::string& body) {
    auto parts = split(body, ',');
    if (parts.size() != 2) throw InputError("expected two integers in '" + spec + "'");
    return std::pair{parse_int(parts[0], 0), parse_int(parts[1], 0)};
  };
  if (digest_source) *digest_source = spec;
  if (spec.size() > 3 && spec.rfind("U(", 0) == 0 && spec.back() == ')') {
    auto [m, r] = two_ints(spec.substr(2, spec.size() - 3));
    return uniform(m, r);
  }
  if (spec.rfind("uniform:", 0) == 0) {
    auto [m, r] = two_ints(spec.substr(8));
    return uniform(m, r);
  }
  if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C') &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int n = parse_int(spec.substr(1), 0);
    return graphic(spec[0] == 'K' ? Graph::complete(n) : Graph::cycle(n));
  }
  LoadedInput in = load_file(spec);
  if (!in.matroid) throw InputError("'" + spec + "' is a weight file, not a matroid");
  if (digest_source) *digest_source = in.text;
  return *in.matroid;
}

json to_json(const Rat& r) { return r.str(); }

json to_json(const LaurentQ& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back(c.str());
  return {{"min_exp", q.min_exp()}, {"coeffs", coeffs}};
}

json to_json(const GroundSet& g, Mask s) { return g.labels_of(s); }

json to_json(const RatPoly& p) {
  json out = json::array();
  for (const auto& [s, c] : p.terms())
    out.push_back({{"support", to_json(p.ground(), s)}, {"squared", json::array()}, {"coeff", c.str()}});
  return out;
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [s, c] : p.terms())
    out.push_back({{"support", to_json(p.ground(), s)}, {"squared", json::array()}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const RatQuad& p) {
  json out = json::array();
  for (const auto& [mono, c] : p.terms())
    out.push_back({{"support", to_json(p.ground(), mono.support)},
                   {"squared", to_json(p.ground(), mono.squared)},
                   {"coeff", c.str()}});
  return out;
}

json to_json(const SetSystem& q) {
  json out = json::array();
  SetSystem sorted = q.sorted();
  for (Mask s : sorted.members()) out.push_back(to_json(q.ground(), s));
  return out;
}

json to_json(const PartitionPoly& p) {
  json out;
  out["model"] = p.model.name();
  out["elements"] = p.ground().labels();
  if (p.model.kind == ModelKind::Potts) out["q_mode"] = p.model.q0 ? "evaluated" : "symbolic";
  if (p.model.q0) out["q"] = p.model.q0->str();
  out["terms"] = p.symbolic() ? to_json(p.laurent()) : to_json(p.rat());
  return out;
}

json to_json(const RayleighVerdict& v, const GroundSet& g) {
  json out;
  out["status"] = status_name(v.status);
  out["method"] = v.method;
  if (v.pair) out["pair"] = {g.label(v.pair->first), g.label(v.pair->second)};
  if (!v.detail.empty()) out["detail"] = v.detail;
  if (!v.witness.empty()) {
    json w = json::object();
    for (int i = 0; i < g.size(); ++i) w[g.label(i)] = v.witness[static_cast<std::size_t>(i)].str();
    out["witness"] = w;
  }
  if (v.value) out["value"] = v.value->str();
  if (v.index) out["index"] = *v.index;
  if (v.samples > 0) out["samples"] = v.samples;
  if (v.min_sampled) out["min_sampled"] = v.min_sampled->str();
  return out;
}

json to_json(const ConditionResult& r) {
  json out{{"holds", r.holds}};
  if (r.witness) out["witness"] = *r.witness;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace rforge
