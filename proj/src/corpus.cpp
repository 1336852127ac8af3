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


#include "rforge/corpus.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "rforge/potts.hpp"
#include "rforge/sequences.hpp"
#include "rforge/structure.hpp"

namespace rforge {

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Graph::Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) out.push_back({edges[i].first, edges[i].second, std::to_string(i + 1)});
  return Graph(n, std::move(out));
}

bool glueable(const Matroid& m, int e) { return !m.is_loop(e) && !m.is_coloop(e); }

Matroid relabel_for_glue(const Matroid& m, int elem, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i < m.size(); ++i) labels.push_back(i == elem ? "g" : prefix + m.ground().label(i));
  return relabel(m, GroundSet(labels));
}

/// Collects failures of one corpus case.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 10) failures_.push_back(what);
  }
  void inconclusive(const std::string& what) {
    ++inconclusive_;
    if (notes_.size() < 10) notes_.push_back(what);
  }
  void note(const std::string& key, json value) { extra_[key] = std::move(value); }
  CaseResult result() const {
    CaseResult r{name_, Status::Verified, json::object()};
    if (failed_ > 0) r.status = Status::Refuted;
    else if (inconclusive_ > 0) r.status = Status::Inconclusive;
    r.detail["checked"] = checked_;
    r.detail["failed"] = failed_;
    if (!failures_.empty()) r.detail["failures"] = failures_;
    if (inconclusive_ > 0) {
      r.detail["inconclusive"] = inconclusive_;
      r.detail["notes"] = notes_;
    }
    for (const auto& [k, v] : extra_.items()) r.detail[k] = v;
    return r;
  }

 private:
  std::string name_;
  int checked_ = 0, failed_ = 0, inconclusive_ = 0;
  std::vector<std::string> failures_, notes_;
  json extra_ = json::object();
};

std::vector<Rat> ints(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool all_nonnegative(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.sign() >= 0; });
}

bool quad_nonnegative(const RatQuad& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.sign() >= 0; });
}

// ---- cases ---------------------------------------------------------------

CaseResult gamma_table() {
  Tally t("gamma-table");
  auto seq = [](const Rat& g) { return Seq({Rat(1), Rat(12), Rat(60), Rat(20) * g, Rat(60), Rat(12), Rat(1)}, 6, 0); };
  struct Row {
    Condition cond;
    std::function<bool(const Rat&)> expected;
  };
  const std::vector<Row> rows = {
      {Condition::A4, [](const Rat& g) { return Rat(4) <= g && g <= Rat(8); }},
      {Condition::A2, [](const Rat& g) { return Rat(3) <= g && g <= Rat(15); }},
      {Condition::A1, [](const Rat& g) { return Rat(3) <= g; }},
      {Condition::A0, [](const Rat& g) { return g.sign() > 0; }},
  };
  for (const char* text : {"0", "1/100", "299/100", "3", "301/100", "399/100", "4", "401/100", "799/100", "8",
                           "801/100", "1499/100", "15", "1501/100", "20"}) {
    Rat g = Rat::parse(text);
    for (const auto& row : rows) {
      bool got = check_condition(seq(g), row.cond).holds;
      t.check(got == row.expected(g), condition_name(row.cond) + " at gamma=" + g.str());
    }
  }
  auto diag_ok = [](const Rat& g) {
    return all_nonnegative(diagonal_delta(SymSeq({Rat(1), Rat(2), Rat(4), g, Rat(4), Rat(2), Rat(1)})));
  };
  t.check(diag_ok(Rat(262, 100)), "diagonal difference nonnegative at 262/100");
  t.check(!diag_ok(Rat(261, 100)), "diagonal difference has a negative coefficient at 261/100");
  t.check(diag_ok(Rat(8)), "diagonal difference nonnegative at 8");
  t.check(!diag_ok(Rat(801, 100)), "diagonal difference has a negative coefficient at 801/100");
  t.check(diag_ok(Rat(29, 10)) && !check_condition(seq(Rat(29, 10)), Condition::A1).holds,
          "gamma=29/10: diagonal difference nonnegative yet not unimodal");
  return t.result();
}

CaseResult uniform_potts() {
  Tally t("uniform-potts");
  for (int m = 1; m <= 10; ++m)
    for (int r = 0; r <= m; ++r) {
      std::string tag = "U(" + std::to_string(m) + "," + std::to_string(r) + ")";
      for (const char* q : {"1/4", "1/2", "9/10", "1"}) {
        auto v = exchangeable_check(uniform_potts_sequence(m, r, Rat::parse(q)));
        t.check(v.status == Status::Verified, tag + " at q=" + q);
      }
      if (r == 0 || r == m) continue;
      auto v = exchangeable_check(uniform_potts_sequence(m, r, Rat(2)));
      t.check(v.status == Status::Refuted && v.index == r, tag + " at q=2 refuted at k=r");
      if (v.status == Status::Refuted && !v.witness.empty() && v.pair && m <= 8) {
        RatPoly z = uniform_potts_sequence(m, r, Rat(2)).to_poly(GroundSet::numbered(m));
        t.check(rayleigh_value(z, v.pair->first, v.pair->second, v.witness).sign() < 0, tag + " witness re-evaluates negative");
      }
    }
  return t.result();
}

CaseResult k4_certificates() {
  Tally t("k4-certificates");
  Matroid k4 = graphic(Graph::complete(4));
  RatPoly z = model_poly(k4, Model::independent()).rat();
  t.check(check_pair(z, 0, 1, Strategy::coeff()).status == Status::Verified, "adjacent pair 1,2 has nonnegative coefficients");
  RatQuad d12 = rayleigh_diff(z, 0, 1);
  t.check(std::all_of(d12.terms().begin(), d12.terms().end(), [](const auto& x) { return x.second.sign() > 0; }),
          "adjacent pair 1,2 has positive coefficients");
  auto cert = [](std::vector<std::string> a, std::vector<std::string> b) {
    return SquareCertificate{{{Rat(1), std::move(a), std::move(b)}}};
  };
  std::map<Pair, SquareCertificate> certs = {
      {{0, 5}, cert({"2", "5"}, {"3", "4"})},
      {{1, 4}, cert({"1", "6"}, {"3", "4"})},
      {{2, 3}, cert({"1", "6"}, {"2", "5"})},
  };
  t.check(quad_nonnegative(rayleigh_diff(z, 0, 5) - certs.at({0, 5}).to_poly(z.ground().without(bit(0) | bit(5)))),
          "pair 1,6 minus (y2y5 - y3y4)^2 is coefficientwise nonnegative");
  t.check(check_pair(z, 0, 5, Strategy::coeff()).status == Status::Inconclusive, "pair 1,6 alone has a negative coefficient");
  AllVerdicts all = check_all(z, Strategy::certificate(certs));
  t.check(all.summary == Status::Verified, "independent sets of K4 verified under the certificate strategy");
  return t.result();
}

std::vector<NamedMatroid> slice_corpus(std::uint64_t seed) {
  std::vector<NamedMatroid> out = uniform_corpus(6);
  for (auto& g : graphic_corpus()) out.push_back(std::move(g));
  for (const auto& c : two_sum_corpus(seed, 10, 10)) out.push_back({c.name, two_sum(c.left, c.right, c.glue)});
  return out;
}

CaseResult potts_slice_case(std::uint64_t seed) {
  Tally t("potts-slices");
  int coloops = 0, idx = 0;
  for (const auto& nm : slice_corpus(seed))
    for (int g = 0; g < nm.matroid.size(); ++g) {
      PottsSlices s = potts_slices(nm.matroid, g, derive_seed(seed, static_cast<std::uint64_t>(idx++)), 100);
      coloops += s.coloop ? 1 : 0;
      for (const auto& r : s.reports) t.check(r.holds, nm.name + " g=" + nm.matroid.ground().label(g) + ": " + r.name + " " + r.detail);
    }
  t.check(coloops > 0, "coloop equality branch exercised");
  t.note("coloop_elements", coloops);
  return t.result();
}

bool same_partition(const PartitionPoly& a, const PartitionPoly& b) {
  if (a.symbolic() != b.symbolic()) return false;
  return a.symbolic() ? same_up_to_order(a.laurent(), b.laurent()) : same_up_to_order(a.rat(), b.rat());
}

CaseResult twosum_models(std::uint64_t seed) {
  Tally t("twosum-models");
  for (const auto& c : two_sum_corpus(seed, 20, 10)) {
    Matroid n = two_sum(c.left, c.right, c.glue);
    for (const Model& model : {Model::bases(), Model::independent(), Model::spanning(), Model::potts_symbolic()}) {
      PartitionPoly composed =
          twosum_compose(model_poly(c.left, model), model_poly(c.right, model), c.glue, model);
      t.check(same_partition(composed, model_poly(n, model)), c.name + " " + model.name());
    }
  }
  return t.result();
}

CaseResult twosum_factorization(std::uint64_t seed) {
  Tally t("twosum-factorization");
  std::vector<TwoSumCase> cases = {{"triangle+triangle", uniform(GroundSet({"a", "b", "g"}), 2),
                                    uniform(GroundSet({"g", "c", "d"}), 2), "g"}};
  for (auto& c : two_sum_corpus(seed, 10, 9)) cases.push_back(std::move(c));
  for (const auto& c : cases) {
    RatPoly zl = model_poly(c.left, Model::independent()).rat();
    RatPoly zm = model_poly(c.right, Model::independent()).rat();
    RatPoly zn = model_poly(two_sum(c.left, c.right, c.glue), Model::independent()).rat();
    int gl = c.left.ground().index_of(c.glue), gm = c.right.ground().index_of(c.glue);
    for (int e = 0; e < c.left.size(); ++e)
      for (int f = 0; f < c.right.size(); ++f) {
        if (e == gl || f == gm) continue;
        const std::string& le = c.left.ground().label(e);
        const std::string& rf = c.right.ground().label(f);
        RatQuad lhs = rayleigh_diff(zn, zn.ground().index_of(le), zn.ground().index_of(rf));
        RatQuad rhs = multiply_disjoint(rayleigh_diff(zl, e, gl), rayleigh_diff(zm, gm, f));
        t.check(same_up_to_order(rhs, lhs), c.name + " pair " + le + "," + rf);
      }
  }
  return t.result();
}

CaseResult support_suites(const std::vector<const NamedWeight*>& verified) {
  Tally t("support-suites");
  int exhaustive = 0;
  for (const NamedWeight* w : verified) {
    for (const auto& r : support_suite(w->omega)) {
      if (!r.applicable) continue;
      if (r.name.rfind("exchange-", 0) == 0 && w->omega.ground().size() > 8) continue;
      t.check(r.holds, w->name + ": " + r.name + " " + r.detail);
    }
    exhaustive += w->omega.ground().size() <= 8 ? 1 : 0;
  }
  t.note("weights", static_cast<int>(verified.size()));
  t.note("exchange_exhaustive", exhaustive);
  return t.result();
}

CaseResult minor_closure(const std::vector<const NamedWeight*>& verified) {
  Tally t("minor-closure");
  auto verified_poly = [](const RatPoly& z) {
    return z.is_zero() || check_all(z, Strategy::coeff()).summary == Status::Verified;
  };
  for (const NamedWeight* w : verified) {
    if (w->omega.ground().size() > 8) continue;
    for (int g = 0; g < w->omega.ground().size(); ++g) {
      t.check(verified_poly(w->omega.deletion(g)), w->name + " deletion " + w->omega.ground().label(g));
      t.check(verified_poly(w->omega.contraction(g)), w->name + " contraction " + w->omega.ground().label(g));
    }
    t.check(verified_poly(dualize(w->omega)), w->name + " dual");
  }
  return t.result();
}

RatPoly random_weights(SplitMix64& g, int m) {
  GroundSet ground = GroundSet::numbered(m);
  std::map<Mask, Rat> w;
  const Mask full = ground.full();
  int mode = static_cast<int>(g.below(3));
  for (Mask s = 0;; ++s) {
    bool keep = mode == 0 || (mode == 1 ? g.below(2) == 0 : g.below(4) == 0);
    if (keep) w[s] = Rat(1 + static_cast<long>(g.below(9)));
    if (s == full) break;
  }
  if (w.empty()) w[full] = Rat(1);
  return from_weights(ground, w);
}

CaseResult flattened_case(std::uint64_t seed, const std::vector<NamedWeight>& weights) {
  Tally t("flattened-exchangeable");
  SplitMix64 g(seed);
  for (int i = 0; i < 100; ++i) {
    int m = 1 + static_cast<int>(g.below(6));
    auto r = flattened_exchangeable(random_weights(g, m));
    t.check(r.holds, "random weight " + std::to_string(i) + ": " + r.detail);
  }
  for (const auto& w : weights) {
    if (w.omega.ground().size() > 8) continue;
    auto r = flattened_exchangeable(w.omega);
    if (r.applicable) t.check(r.holds, w.name + ": " + r.detail);
  }
  return t.result();
}

CaseResult triple_case(const std::vector<const NamedWeight*>& verified, std::uint64_t seed, int points) {
  Tally t("triple-condition");
  std::uint64_t stream = 0;
  int negative = 0;
  for (const NamedWeight* w : verified) {
    const int m = w->omega.ground().size();
    if (m < 3 || m > 6) continue;
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f)
        for (int g = 0; g < m; ++g) {
          if (g == e || g == f) continue;
          auto rep = triple_condition_check(w->omega, e, f, g, points, true, derive_seed(seed, stream++));
          negative += rep.negative_theta;
          t.check(rep.violations == 0, w->name + " triple " + std::to_string(e) + "," + std::to_string(f) + "|" + std::to_string(g));
        }
  }
  t.note("negative_theta_points", negative);
  return t.result();
}

CaseResult association_case(const std::vector<const NamedWeight*>& verified, std::uint64_t seed) {
  Tally t("negative-association");
  SplitMix64 g(seed);
  int used = 0;
  for (const NamedWeight* w : verified) {
    const RatPoly& z = w->omega;
    if (z.ground().size() != 6) continue;
    SupportProfile p = support(z);
    if (p.r != p.s) continue;
    ++used;
    for (int i = 0; i < 10; ++i) {
      Point y;
      for (int k = 0; k < 6; ++k) y.push_back(log_uniform_dyadic(g));
      auto rep = negative_association_check(z, 0x07, 0x38, y);
      t.check(rep.violations == 0, w->name + " point " + std::to_string(i));
    }
  }
  t.check(used > 0, "at least one homogeneous six-element polynomial");
  t.note("polynomials", used);
  return t.result();
}

CaseResult forest_case(std::uint64_t seed) {
  Tally t("forest-charpoly");
  SplitMix64 g(seed);
  for (const auto& ng : graph_corpus()) {
    ForestWeights fw = forest_weights(ng.graph);
    t.check(fw.identity_holds, ng.name + " at y = 1");
    const int n = ng.graph.n;
    for (int rep = 0; rep < 3; ++rep) {
      Point y;
      for (std::size_t i = 0; i < ng.graph.edges.size(); ++i) y.push_back(Rat(1 + static_cast<long>(g.below(16)), 1 + static_cast<long>(g.below(8))));
      std::vector<Rat> cp = weighted_laplacian_charpoly(ng.graph, y);
      std::vector<Rat> expect(static_cast<std::size_t>(n) + 1, Rat(0));
      for (const auto& [s, c] : fw.omega.terms()) {
        Rat v = c;
        for (Mask x = s; x != 0; x &= x - 1) v *= y[static_cast<std::size_t>(std::countr_zero(x))];
        expect[static_cast<std::size_t>(n - popcount(s))] += v;
      }
      t.check(cp == expect, ng.name + " at a random point");
    }
  }
  return t.result();
}

SymSeq random_symseq(SplitMix64& g) {
  int m = 2 + static_cast<int>(g.below(7));
  std::vector<Rat> a;
  if (g.coin()) {
    // Coefficients of a real-rooted polynomial, normalized.
    std::vector<Rat> roots;
    for (int i = 0; i < m; ++i) roots.emplace_back(1 + static_cast<long>(g.below(5)));
    std::vector<Rat> e = elementary_symmetric(roots);
    for (int k = 0; k <= m; ++k) a.push_back(e[static_cast<std::size_t>(k)] / binomial(m, k));
    if (g.below(3) == 0) a[static_cast<std::size_t>(g.below(static_cast<std::uint64_t>(m) + 1))] *= Rat(3, 2);
  } else {
    for (int k = 0; k <= m; ++k) a.emplace_back(static_cast<long>(g.below(5)));
    if (std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); })) a[0] = Rat(1);
  }
  return SymSeq(a);
}

CaseResult exchangeable_monomial(std::uint64_t seed) {
  Tally t("exchangeable-monomial");
  SplitMix64 g(seed);
  int verified = 0;
  for (int i = 0; i < 200; ++i) {
    SymSeq a = random_symseq(g);
    bool lc = exchangeable_check(a).status == Status::Verified;
    RatPoly z = a.to_poly(GroundSet::numbered(a.m));
    auto coeffs = monomial_symmetric_expand(rayleigh_diff(z, 0, 1));
    bool positive = std::all_of(coeffs.begin(), coeffs.end(), [](const auto& c) { return c.second.sign() >= 0; });
    verified += lc ? 1 : 0;
    t.check(lc == positive, "sequence " + std::to_string(i));
  }
  t.note("log_concave", verified);
  return t.result();
}

Seq random_seq(SplitMix64& g, bool log_concave) {
  int len = 1 + static_cast<int>(g.below(6));
  int offset = static_cast<int>(g.below(3));
  std::vector<Rat> v;
  if (log_concave) {
    std::vector<Rat> roots;
    for (int i = 0; i + 1 < len; ++i) roots.emplace_back(1 + static_cast<long>(g.below(6)), 1 + static_cast<long>(g.below(3)));
    v = elementary_symmetric(roots);
  } else {
    for (int i = 0; i < len; ++i) v.emplace_back(static_cast<long>(g.below(7)) - (g.below(5) == 0 ? 3 : 0));
  }
  Seq s;
  s.offset = offset;
  s.entries = std::move(v);
  return s;
}

CaseResult convolution_case(std::uint64_t seed) {
  Tally t("convolution");
  SplitMix64 g(seed);
  for (int i = 0; i < 200; ++i) {
    bool lc = i % 2 == 0;
    Seq a = random_seq(g, lc), b = random_seq(g, lc);
    for (int n = 1; n <= a.last() + 1; ++n)
      t.check(convolution_identity(a, b, n).equal, "pair " + std::to_string(i) + " n=" + std::to_string(n));
    if (lc) {
      Seq c = convolve(a, b);
      t.check(check_condition(c, Condition::A2).holds && check_condition(c, Condition::A0).holds,
              "pair " + std::to_string(i) + " convolution keeps (a-2,0)");
    }
  }
  return t.result();
}

CaseResult golden_invariants() {
  Tally t("golden-invariants");
  Matroid k4 = graphic(Graph::complete(4));
  t.check(enumerate(k4, Family::Bases).size() == 16, "K4 has 16 bases");
  InvariantSequences s = invariant_sequences(k4, bit(0));
  t.check(s.independent == ints({1, 6, 15, 16}), "K4 independent counts");
  t.check(s.flats == ints({1, 6, 7, 1}), "K4 flat counts");
  t.check(s.basis_split == ints({8, 8}), "K4 basis split on edge 1");
  InvariantSequences u = invariant_sequences(uniform(3, 2));
  t.check(u.broken_circuit == ints({1, 3, 2}), "U(3,2) broken-circuit counts");
  t.check(u.h == ints({1, 1, 1}), "U(3,2) h-vector");
  return t.result();
}

}  // namespace

std::vector<NamedMatroid> uniform_corpus(int max_m) {
  std::vector<NamedMatroid> out;
  for (int m = 1; m <= max_m; ++m)
    for (int r = 0; r <= m; ++r) out.push_back({"U(" + std::to_string(m) + "," + std::to_string(r) + ")", uniform(m, r)});
  return out;
}

std::vector<NamedGraph> graph_corpus() {
  return {
      {"K2", make_graph(2, {{0, 1}})},
      {"P3", make_graph(3, {{0, 1}, {1, 2}})},
      {"K3", Graph::complete(3)},
      {"P4", make_graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"star3", make_graph(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"C4", Graph::cycle(4)},
      {"paw", make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})},
      {"diamond", make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})},
      {"K4", Graph::complete(4)},
      {"C5", Graph::cycle(5)},
      {"house", make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})},
      {"bowtie", make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})},
      {"W4", make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}})},
      {"K5-e", make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})},
      {"K5", Graph::complete(5)},
  };
}

std::vector<NamedMatroid> graphic_corpus() {
  std::vector<NamedMatroid> out;
  for (const auto& g : graph_corpus()) out.push_back({g.name, graphic(g.graph)});
  return out;
}

TwoSumCase glue_pair(const NamedMatroid& a, int a_elem, const NamedMatroid& b, int b_elem) {
  return {a.name + "+" + b.name, relabel_for_glue(a.matroid, a_elem, "l"), relabel_for_glue(b.matroid, b_elem, "r"), "g"};
}

std::vector<TwoSumCase> two_sum_corpus(std::uint64_t seed, int count, int max_size) {
  std::vector<NamedMatroid> pool;
  for (auto& nm : uniform_corpus(6))
    if (nm.matroid.rank() > 0 && nm.matroid.rank() < nm.matroid.size()) pool.push_back(std::move(nm));
  for (auto& nm : graphic_corpus()) {
    bool any = false;
    for (int e = 0; e < nm.matroid.size(); ++e) any = any || glueable(nm.matroid, e);
    if (any) pool.push_back(std::move(nm));
  }
  SplitMix64 g(seed);
  std::vector<TwoSumCase> out;
  for (int attempts = 0; static_cast<int>(out.size()) < count && attempts < 100000; ++attempts) {
    const auto& a = pool[g.below(pool.size())];
    const auto& b = pool[g.below(pool.size())];
    if (a.matroid.size() + b.matroid.size() - 2 > max_size) continue;
    int ea = static_cast<int>(g.below(static_cast<std::uint64_t>(a.matroid.size())));
    int eb = static_cast<int>(g.below(static_cast<std::uint64_t>(b.matroid.size())));
    if (!glueable(a.matroid, ea) || !glueable(b.matroid, eb)) continue;
    TwoSumCase c = glue_pair(a, ea, b, eb);
    c.name += "@" + a.matroid.ground().label(ea) + "," + b.matroid.ground().label(eb);
    out.push_back(std::move(c));
  }
  return out;
}

RatMatrix random_mmatrix(SplitMix64& g, int n) {
  RatMatrix a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat v(-static_cast<long>(g.below(4)), 4);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  for (int i = 0; i < n; ++i) {
    Rat off(0);
    for (int j = 0; j < n; ++j)
      if (j != i) off -= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = off + Rat(1 + static_cast<long>(g.below(4)), 2);
  }
  return a;
}

std::vector<NamedWeight> weight_corpus(std::uint64_t seed) {
  std::vector<NamedMatroid> mats = uniform_corpus(6);
  for (auto& nm : graphic_corpus()) mats.push_back(std::move(nm));
  for (const auto& c : two_sum_corpus(seed, 6, 8)) mats.push_back({c.name, two_sum(c.left, c.right, c.glue)});
  std::vector<NamedWeight> out;
  for (const auto& nm : mats) {
    out.push_back({"B " + nm.name, model_poly(nm.matroid, Model::bases()).rat()});
    if (nm.matroid.size() > 8) continue;
    out.push_back({"I " + nm.name, model_poly(nm.matroid, Model::independent()).rat()});
    out.push_back({"S " + nm.name, model_poly(nm.matroid, Model::spanning()).rat()});
    if (nm.matroid.size() <= 6) out.push_back({"Potts(1/2) " + nm.name, potts_evaluated(nm.matroid, Rat(1, 2))});
  }
  SplitMix64 g(seed ^ 0x5157);
  for (int i = 0; i < 6; ++i) {
    int n = 3 + i % 2;
    out.push_back({"M-matrix " + std::to_string(i), mmatrix_weights(random_mmatrix(g, n))});
  }
  out.push_back({"forests K3", forest_weights(Graph::complete(3)).omega});
  out.push_back({"forests K4", forest_weights(Graph::complete(4)).omega});
  GroundSet two = GroundSet::numbered(2), three = GroundSet::numbered(3);
  out.push_back({"control 1+y1y2", from_weights(two, {{0, Rat(1)}, {3, Rat(1)}})});
  out.push_back({"control {1},{2,3}", from_weights(three, {{1, Rat(1)}, {6, Rat(1)}})});
  out.push_back({"control 1+y1+y2+2y1y2", from_weights(two, {{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}, {3, Rat(2)}})});
  return out;
}

std::vector<std::string> corpus_case_names() {
  return {"gamma-table",     "uniform-potts",          "k4-certificates",  "potts-slices",
          "twosum-models",   "twosum-factorization",   "support-suites",   "minor-closure",
          "flattened-exchangeable", "triple-condition", "negative-association", "forest-charpoly",
          "exchangeable-monomial",  "convolution",      "golden-invariants"};
}

CorpusReport run_corpus(const CorpusOptions& options) {
  const auto names = corpus_case_names();
  for (const auto& o : options.only)
    if (std::find(names.begin(), names.end(), o) == names.end()) throw InputError("unknown corpus case '" + o + "'");
  auto wanted = [&](const std::string& n) {
    return options.only.empty() || std::find(options.only.begin(), options.only.end(), n) != options.only.end();
  };
  const std::uint64_t seed = options.seed;

  std::optional<std::vector<NamedWeight>> weights;
  std::vector<const NamedWeight*> verified;
  auto load_weights = [&]() -> const std::vector<NamedWeight>& {
    if (!weights) {
      weights = weight_corpus(seed);
      for (const auto& w : options.extra_weights) weights->push_back(w);
      for (const auto& w : *weights)
        if (check_all(w.omega, Strategy::coeff()).summary == Status::Verified) verified.push_back(&w);
    }
    return *weights;
  };

  CorpusReport rep;
  std::uint64_t k = 0;
  for (const auto& name : names) {
    std::uint64_t s = derive_seed(seed, k++);
    if (!wanted(name)) continue;
    CaseResult r;
    if (name == "gamma-table") r = gamma_table();
    else if (name == "uniform-potts") r = uniform_potts();
    else if (name == "k4-certificates") r = k4_certificates();
    else if (name == "potts-slices") r = potts_slice_case(s);
    else if (name == "twosum-models") r = twosum_models(s);
    else if (name == "twosum-factorization") r = twosum_factorization(s);
    else if (name == "support-suites") { load_weights(); r = support_suites(verified); }
    else if (name == "minor-closure") { load_weights(); r = minor_closure(verified); }
    else if (name == "flattened-exchangeable") r = flattened_case(s, load_weights());
    else if (name == "triple-condition") { load_weights(); r = triple_case(verified, s, 20); }
    else if (name == "negative-association") { load_weights(); r = association_case(verified, s); }
    else if (name == "forest-charpoly") r = forest_case(s);
    else if (name == "exchangeable-monomial") r = exchangeable_monomial(s);
    else if (name == "convolution") r = convolution_case(s);
    else r = golden_invariants();
    rep.cases.push_back(std::move(r));
  }
  for (const auto& c : rep.cases) {
    if (c.status == Status::Refuted) rep.summary = Status::Refuted;
    else if (c.status == Status::Inconclusive && rep.summary == Status::Verified) rep.summary = Status::Inconclusive;
  }
  return rep;
}

}  // namespace rforge
