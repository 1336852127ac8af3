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


#include "rforge/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "rforge/corpus.hpp"
#include "rforge/io.hpp"
#include "rforge/potts.hpp"
#include "rforge/rayleigh.hpp"
#include "rforge/sequences.hpp"
#include "rforge/structure.hpp"

namespace rforge {

namespace {

struct Outcome {
  json result = json::object();
  int code = kExitOk;
  std::vector<std::string> lines;
};

struct Input {
  std::string name;
  std::string bytes;
};

struct Context {
  std::uint64_t seed = kDefaultSeed;
  std::vector<Input> inputs;
};

int code_of(Status s) {
  switch (s) {
    case Status::Verified: return kExitOk;
    case Status::Refuted: return kExitRefuted;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitInternal;
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used, 0);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("invalid seed '" + s + "'");
  }
}

Matroid matroid_arg(Context& ctx, const std::string& spec) {
  std::string bytes;
  Matroid m = load_matroid(spec, &bytes);
  ctx.inputs.push_back({spec, bytes});
  return m;
}

Model model_arg(const std::string& tag, const std::string& q) {
  std::optional<Rat> q0;
  if (!q.empty()) q0 = Rat::parse(q);
  if (q0 && tag != "potts") throw InputError("--q applies only to the potts model");
  return Model::parse(tag, q0);
}

/// A rational partition function: a weight file, or a matroid under a model.
RatPoly poly_arg(Context& ctx, const std::string& input, const Model& model) {
  if (std::filesystem::is_regular_file(input)) {
    LoadedInput in = load_file(input);
    ctx.inputs.push_back({input, in.text});
    if (in.weights) return *in.weights;
    if (model.symbolic()) throw InputError("sign decisions need --q with the potts model");
    return model_poly(*in.matroid, model).rat();
  }
  Matroid m = matroid_arg(ctx, input);
  if (model.symbolic()) throw InputError("sign decisions need --q with the potts model");
  return model_poly(m, model).rat();
}

Pair pair_arg(const GroundSet& g, const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("expected a pair 'e,f', got '" + text + "'");
  int e = g.index_of(trim(parts[0])), f = g.index_of(trim(parts[1]));
  if (e == f) throw InputError("pair elements must differ");
  return {std::min(e, f), std::max(e, f)};
}

json verdicts_json(const AllVerdicts& all, const GroundSet& g) {
  json out = json::array();
  for (const auto& [p, v] : all.pairs) out.push_back(to_json(v, g));
  return out;
}

json seq_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// ---- handlers ------------------------------------------------------------

Outcome matroid_info(Context& ctx, const std::string& spec, const std::string& eprime) {
  Matroid m = matroid_arg(ctx, spec);
  std::optional<Mask> ep;
  if (!eprime.empty()) ep = m.ground().mask_of(split(eprime, ','));
  InvariantSequences s = invariant_sequences(m, ep);
  Outcome o;
  o.result["elements"] = m.ground().labels();
  o.result["rank"] = m.rank();
  o.result["provenance"] = m.provenance();
  o.result["bases"] = enumerate(m, Family::Bases).size();
  json loops = json::array(), coloops = json::array();
  for (int e = 0; e < m.size(); ++e) {
    if (m.is_loop(e)) loops.push_back(m.ground().label(e));
    if (m.is_coloop(e)) coloops.push_back(m.ground().label(e));
  }
  o.result["loops"] = loops;
  o.result["coloops"] = coloops;
  o.result["independent"] = seq_json(s.independent);
  o.result["flats"] = seq_json(s.flats);
  o.result["broken_circuit"] = seq_json(s.broken_circuit);
  o.result["h"] = seq_json(s.h);
  if (ep) {
    o.result["eprime"] = m.ground().labels_of(*ep);
    o.result["basis_split"] = seq_json(s.basis_split);
  }
  o.lines.push_back(m.provenance() + ": " + std::to_string(m.size()) + " elements, rank " + std::to_string(m.rank()) +
                    ", " + o.result["bases"].dump() + " bases");
  return o;
}

struct RayleighArgs {
  std::string input, model = "bases", q, strategy = "coeff", pair, certificate;
  int samples = 1000;
};

Outcome rayleigh_check(Context& ctx, const RayleighArgs& a) {
  RatPoly z = poly_arg(ctx, a.input, model_arg(a.model, a.q));
  const GroundSet& g = z.ground();
  Strategy st;
  if (a.strategy == "coeff") {
    st = Strategy::coeff();
  } else if (a.strategy == "sample") {
    if (a.samples <= 0) throw InputError("--samples must be positive");
    st = Strategy::sample(a.samples, ctx.seed);
  } else if (a.strategy == "cert") {
    if (a.certificate.empty()) throw InputError("--strategy cert needs --certificate");
    std::ifstream f(a.certificate);
    if (!f) throw InputError("cannot open '" + a.certificate + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    ctx.inputs.push_back({a.certificate, buf.str()});
    std::istringstream in(buf.str());
    CertificateFile cf = parse_certificate(in);
    std::map<Pair, SquareCertificate> certs;
    for (const auto& [labels, c] : cf.keyed) certs[pair_arg(g, labels.first + "," + labels.second)] = c;
    if (!cf.unkeyed.terms.empty()) {
      if (a.pair.empty()) throw InputError("certificate lines without a 'pair' header need --pair");
      certs[pair_arg(g, a.pair)] = cf.unkeyed;
    }
    st = Strategy::certificate(std::move(certs));
  } else {
    throw InputError("unknown strategy '" + a.strategy + "'");
  }
  Outcome o;
  o.result["elements"] = g.labels();
  o.result["strategy"] = a.strategy;
  if (!a.pair.empty()) {
    Pair p = pair_arg(g, a.pair);
    RayleighVerdict v = check_pair(z, p.first, p.second, st, 0);
    o.result["verdicts"] = json::array({to_json(v, g)});
    o.result["summary"] = status_name(v.status);
    o.code = code_of(v.status);
    o.lines.push_back(g.label(p.first) + "," + g.label(p.second) + ": " + status_name(v.status) + " (" + v.method + ")");
    if (v.status == Status::Inconclusive && !v.detail.empty()) o.lines.push_back("  " + v.detail);
    return o;
  }
  AllVerdicts all = check_all(z, st);
  o.result["verdicts"] = verdicts_json(all, g);
  o.result["summary"] = status_name(all.summary);
  o.code = code_of(all.summary);
  int counts[3] = {0, 0, 0};
  for (const auto& [p, v] : all.pairs) ++counts[static_cast<int>(v.status)];
  o.lines.push_back(status_name(all.summary) + ": " + std::to_string(counts[0]) + " verified, " +
                    std::to_string(counts[1]) + " refuted, " + std::to_string(counts[2]) + " inconclusive pairs");
  return o;
}

Outcome potts_build(Context& ctx, const std::string& spec, const std::string& q, bool symbolic) {
  if (symbolic && !q.empty()) throw InputError("--q and --symbolic are exclusive");
  Matroid m = matroid_arg(ctx, spec);
  Model model = q.empty() ? Model::potts_symbolic() : Model::potts_at(Rat::parse(q));
  PartitionPoly p = potts_poly(m, model);
  Outcome o;
  o.result = to_json(p);
  o.lines.push_back(model.name() + ": " + std::to_string(p.symbolic() ? p.laurent().size() : p.rat().size()) + " terms");
  return o;
}

Outcome twosum_cmd(Context& ctx, const std::string& l, const std::string& r, const std::string& glue,
                   const std::string& model_tag, const std::string& q) {
  Matroid lm = matroid_arg(ctx, l), rm = matroid_arg(ctx, r);
  Model model = model_arg(model_tag, q);
  PartitionPoly composed = twosum_compose(model_poly(lm, model), model_poly(rm, model), glue, model);
  PartitionPoly direct = model_poly(two_sum(lm, rm, glue), model);
  bool match = composed.symbolic() ? same_up_to_order(composed.laurent(), direct.laurent())
                                   : same_up_to_order(composed.rat(), direct.rat());
  if (!match) throw InternalError("two-sum composition disagrees with the direct construction");
  Outcome o;
  o.result = to_json(composed);
  o.result["direct_match"] = true;
  const std::size_t n = composed.symbolic() ? composed.laurent().size() : composed.rat().size();
  o.lines.push_back(model.name() + " two-sum on " + std::to_string(composed.ground().size()) + " elements: " +
                    std::to_string(n) + " terms");
  if (!composed.symbolic() && n <= 12) {
    std::vector<std::string> terms;
    for (const auto& [s, c] : composed.rat().terms()) {
      std::string t = c == Rat(1) ? "" : c.str() + "*";
      t += s == 0 ? "1" : join(composed.ground().labels_of(s), "");
      terms.push_back(t);
    }
    o.lines.push_back("  " + join(terms, " + "));
  }
  return o;
}

Outcome delta_check(Context& ctx, const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  ctx.inputs.push_back({path, buf.str()});
  std::istringstream scan(buf.str());
  bool weights = false;
  std::string line;
  int row = 0;
  while (std::getline(scan, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (row++ > 0 && t.find(':') != std::string::npos) weights = true;
  }
  std::istringstream in(buf.str());
  RatPoly omega = weights ? parse_weights(in) : parse_bases(in).indicator();
  SupportProfile p = support(omega);
  const GroundSet& g = omega.ground();
  Outcome o;
  bool ok = true;
  auto put = [&](const std::string& key, bool holds, const std::string& detail) {
    o.result[key] = {{"holds", holds}};
    if (!detail.empty()) o.result[key]["witness"] = detail;
    ok = ok && holds;
    o.lines.push_back(key + ": " + (holds ? "yes" : "no") + (detail.empty() ? "" : " (" + detail + ")"));
  };
  o.result["elements"] = g.labels();
  o.result["r"] = p.r;
  o.result["s"] = p.s;
  auto cw = convexity_violation(p.support);
  put("convex", !cw, cw ? "S=" + g.format(cw->s) + " T=" + g.format(cw->t) + " S'=" + g.format(cw->s_prime) : "");
  auto sw = sea_violation(p.support);
  put("sea", !sw, sw ? "A=" + g.format(sw->a) + " B=" + g.format(sw->b) + " e=" + g.label(sw->e) : "");
  auto lw = log_submodular_violation(omega, 100000, ctx.seed);
  put("log_submodular", !lw, lw ? "S=" + g.format(lw->s) + " T=" + g.format(lw->t) : "");
  Flattening fl = flatten(omega);
  o.result["flatten"] = {{"l", fl.l}, {"exchange_ok", fl.exchange_ok()}};
  o.lines.push_back("flatten: l=" + std::to_string(fl.l) + ", exchange " + (fl.exchange_ok() ? "ok" : "fails"));
  ok = ok && fl.exchange_ok();
  json layers_json = json::array();
  for (const auto& layer : layers(p.support)) {
    layers_json.push_back({{"k", layer.k}, {"size", layer.members.size()}, {"exchange_ok", layer.exchange_ok()}});
    ok = ok && layer.exchange_ok();
  }
  o.result["layers"] = layers_json;
  if (g.size() <= 10) {
    ExchangeProps ex = exchange_props_check(p.support);
    json props = json::object();
    for (const auto& r : ex.results) props[r.name] = r.holds;
    o.result["exchange_props"] = {{"vacuous", ex.vacuous}, {"results", props}};
  }
  o.code = ok ? kExitOk : kExitRefuted;
  return o;
}

Outcome seq_check(const std::string& values, int m, int offset, const std::string& conditions) {
  std::optional<int> ambient;
  if (m >= 0) ambient = m;
  Seq seq(parse_rat_list(values), ambient, offset);
  std::vector<Condition> conds;
  if (conditions.empty()) {
    for (Condition c : kAllConditions)
      if (c != Condition::A4 || ambient) conds.push_back(c);
  } else {
    for (const auto& c : split(conditions, ',')) conds.push_back(parse_condition(trim(c)));
  }
  Outcome o;
  for (Condition c : conds) {
    ConditionResult r = check_condition(seq, c);
    o.result[condition_name(c)] = to_json(r);
    if (!r.holds) o.code = kExitRefuted;
    o.lines.push_back(condition_name(c) + ": " + (r.holds ? "holds" : "fails") +
                      (r.witness ? " at k=" + std::to_string(*r.witness) : ""));
  }
  return o;
}

Outcome mason_cmd(Context& ctx, const std::string& spec) {
  Matroid m = matroid_arg(ctx, spec);
  MasonReport rep = mason_report(m);
  Outcome o;
  o.result["m"] = rep.m;
  o.result["r"] = rep.r;
  o.result["independent"] = seq_json(rep.seqs.independent);
  o.result["h"] = seq_json(rep.seqs.h);
  json conds = json::object();
  for (const auto& [name, r] : rep.independent) {
    conds[name] = to_json(r);
    o.lines.push_back(name + ": " + (r.holds ? "holds" : "fails"));
  }
  o.result["conditions"] = conds;
  o.result["h_logconcave"] = to_json(rep.h_logconcave);
  o.result["h_normalized_nonincreasing"] = to_json(rep.h_normalized_nonincreasing);
  o.result["h_integral"] = rep.h_integral;
  o.result["all_pass"] = rep.all_pass();
  o.lines.push_back(std::string("h-vector checks: ") + (rep.h_logconcave.holds && rep.h_normalized_nonincreasing.holds ? "hold" : "fail"));
  o.code = rep.all_pass() ? kExitOk : kExitRefuted;
  return o;
}

struct ProbeArgs {
  std::string input, model = "bases", q, pair, triple, parts, point;
  int samples = 100;
  int steps = 8;
};

Point point_arg(const std::string& text, int size, SplitMix64& g) {
  Point p;
  if (text.empty()) {
    for (int i = 0; i < size; ++i) p.push_back(log_uniform_dyadic(g));
    return p;
  }
  p = parse_rat_list(text);
  if (static_cast<int>(p.size()) != size) throw InputError("--point needs one value per element");
  for (const auto& x : p)
    if (x.sign() <= 0) throw InputError("--point values must be positive");
  return p;
}

Outcome probe_cmd(Context& ctx, const std::string& kind, const ProbeArgs& a) {
  Outcome o;
  if (kind == "qc") {
    Matroid m = matroid_arg(ctx, a.input);
    QcBracket b = estimate_qc(m, a.steps, a.samples, ctx.seed);
    o.result["heuristic"] = !b.exact;
    o.result["lower"] = b.lower.str();
    if (b.upper) o.result["upper"] = b.upper->str();
    json probes = json::array();
    for (const auto& p : b.probes) probes.push_back({{"q", p.q0.str()}, {"status", status_name(p.status)}});
    o.result["probes"] = probes;
    o.lines.push_back("q_c bracket: [" + b.lower.str() + ", " + (b.upper ? b.upper->str() : "1") + "]" +
                      (b.exact ? " (exact test)" : " (heuristic)"));
    return o;
  }
  RatPoly z = poly_arg(ctx, a.input, model_arg(a.model, a.q));
  const GroundSet& g = z.ground();
  if (kind == "symmetrize") {
    SymmetrizationReport r = symmetrize_and_check(z);
    o.result["sequence"] = seq_json(r.seq.a);
    o.result["original"] = status_name(r.original.summary);
    o.result["symmetrized"] = to_json(r.symmetrized, GroundSet::numbered(r.seq.m));
    o.result["counterexample"] = r.counterexample;
    o.result["note"] = r.note;
    o.lines.push_back("original " + status_name(r.original.summary) + ", symmetrized " + status_name(r.symmetrized.status));
    if (r.counterexample) o.code = kExitRefuted;
  } else if (kind == "conjecture") {
    Pair p = pair_arg(g, a.pair.empty() ? g.label(0) + "," + g.label(1) : a.pair);
    ConjectureProbe r = conjecture_probe(z, p.first, p.second, a.samples, ctx.seed);
    o.result["points"] = r.points.size();
    o.result["min_margin"] = r.min_margin.str();
    o.result["min_pair_sum"] = r.min_pair_sum.str();
    o.lines.push_back("min margin " + r.min_margin.str() + ", min pair sum " + r.min_pair_sum.str());
    if (r.min_margin.sign() < 0 || r.min_pair_sum.sign() < 0) o.code = kExitRefuted;
  } else if (kind == "association") {
    auto halves = split(a.parts, '|');
    if (halves.size() != 2) throw InputError("--parts expects 'a,b,c|d,e,f'");
    Mask p1 = g.mask_of(split(trim(halves[0]), ',')), p2 = g.mask_of(split(trim(halves[1]), ','));
    SplitMix64 rng(ctx.seed);
    Point y = point_arg(a.point, g.size(), rng);
    AssociationReport r = negative_association_check(z, p1, p2, y);
    o.result["pairs_checked"] = r.pairs_checked;
    o.result["violations"] = r.violations;
    o.result["max_excess"] = r.max_excess.str();
    o.lines.push_back(std::to_string(r.pairs_checked) + " up-set pairs, " + std::to_string(r.violations) + " violations");
    if (r.violations > 0) o.code = kExitRefuted;
  } else if (kind == "triple") {
    auto parts = split(a.triple, ',');
    if (parts.size() != 3) throw InputError("--triple expects 'e,f,g'");
    int e = g.index_of(trim(parts[0])), f = g.index_of(trim(parts[1])), h = g.index_of(trim(parts[2]));
    bool assumed = check_all(z, Strategy::coeff()).summary == Status::Verified;
    TripleReport r = triple_condition_check(z, e, f, h, a.samples, assumed, ctx.seed);
    o.result["assumed_rayleigh"] = r.assumed_rayleigh;
    o.result["points"] = r.points;
    o.result["negative_theta"] = r.negative_theta;
    o.result["violations"] = r.violations;
    if (r.min_margin) o.result["min_margin"] = r.min_margin->str();
    o.lines.push_back(std::to_string(r.points) + " points, " + std::to_string(r.negative_theta) + " with negative theta, " +
                      std::to_string(r.violations) + " violations");
    if (r.violations > 0) o.code = kExitRefuted;
  } else if (kind == "negterms") {
    Pair p = pair_arg(g, a.pair.empty() ? g.label(0) + "," + g.label(1) : a.pair);
    auto terms = negative_terms(z, p.first, p.second);
    GroundSet rest = g.without(bit(p.first) | bit(p.second));
    json list = json::array();
    for (const auto& [mono, c] : terms)
      list.push_back({{"support", to_json(rest, mono.support)}, {"squared", to_json(rest, mono.squared)}, {"coeff", c.str()}});
    o.result["negative_terms"] = list;
    o.lines.push_back(std::to_string(terms.size()) + " negative coefficients");
  } else {
    throw InputError("unknown probe '" + kind + "'");
  }
  return o;
}

Outcome corpus_cmd(Context& ctx, const std::string& only, const std::vector<std::string>& weight_files, bool list) {
  Outcome o;
  if (list) {
    o.result["cases"] = corpus_case_names();
    for (const auto& n : corpus_case_names()) o.lines.push_back(n);
    return o;
  }
  CorpusOptions opts;
  opts.seed = ctx.seed;
  if (!only.empty())
    for (const auto& n : split(only, ',')) opts.only.push_back(trim(n));
  for (const auto& path : weight_files) {
    LoadedInput in = load_file(path);
    if (!in.weights) throw InputError("'" + path + "' is not a weight file");
    ctx.inputs.push_back({path, in.text});
    opts.extra_weights.push_back({path, *in.weights});
  }
  CorpusReport rep = run_corpus(opts);
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json j{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
    cases.push_back(j);
    std::string tag = c.status == Status::Verified ? "PASS" : c.status == Status::Refuted ? "FAIL" : "INCONCLUSIVE";
    o.lines.push_back(tag + " " + c.name + " (" + c.detail["checked"].dump() + " checks)");
    if (c.detail.contains("failures"))
      for (const auto& f : c.detail["failures"]) o.lines.push_back("  " + f.get<std::string>());
  }
  o.result["cases"] = cases;
  o.result["summary"] = status_name(rep.summary);
  o.code = code_of(rep.summary);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Exact Rayleigh, delta-matroid and log-concavity checks for partition functions", "rayleigh-forge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", RFORGE_VERSION);
  std::string seed_text = "0xD1CE", json_path, format = "text";
  app.add_option("--seed", seed_text, "64-bit seed for all randomness (default 0xD1CE)");
  app.add_option("--json", json_path, "write the JSON report to this path");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "json"}));

  std::function<Outcome(Context&)> action;

  auto* matroid = app.add_subcommand("matroid", "matroid invariants");
  matroid->require_subcommand(1);
  auto* info = matroid->add_subcommand("info", "invariant sequences of a matroid");
  std::string spec, eprime;
  info->add_option("matroid", spec, "U(m,r), K<n>, C<n>, or a graph or bases file")->required();
  info->add_option("--eprime", eprime, "comma-separated subset for the basis split counts");
  info->callback([&] { action = [&](Context& c) { return matroid_info(c, spec, eprime); }; });

  RayleighArgs ra;
  auto* rayleigh = app.add_subcommand("rayleigh", "Rayleigh verdicts");
  rayleigh->require_subcommand(1);
  auto* check = rayleigh->add_subcommand("check", "check pairs of a partition function");
  check->add_option("input", ra.input, "weight file or matroid")->required();
  check->add_option("--model", ra.model, "bases|indep|span|potts");
  check->add_option("--q", ra.q, "evaluate the potts model at q = p/q");
  check->add_option("--strategy", ra.strategy, "coeff|sample|cert");
  check->add_option("--samples", ra.samples, "sample budget per pair");
  check->add_option("--pair", ra.pair, "check a single pair e,f");
  check->add_option("--certificate", ra.certificate, "square certificate file");
  check->callback([&] { action = [&](Context& c) { return rayleigh_check(c, ra); }; });

  std::string q;
  bool symbolic = false;
  auto* potts = app.add_subcommand("potts", "Potts partition functions");
  potts->require_subcommand(1);
  auto* build = potts->add_subcommand("build", "build Z(M, q; y)");
  build->add_option("matroid", spec)->required();
  build->add_option("--q", q, "evaluate at q = p/q");
  build->add_flag("--symbolic", symbolic, "keep q symbolic (default)");
  build->callback([&] { action = [&](Context& c) { return potts_build(c, spec, q, symbolic); }; });

  std::string left, right, glue, model = "bases";
  auto* ts = app.add_subcommand("twosum", "compose partition functions along a two-sum");
  ts->add_option("left", left)->required();
  ts->add_option("right", right)->required();
  ts->add_option("--glue", glue, "shared element")->required();
  ts->add_option("--model", model, "bases|indep|span|potts");
  ts->add_option("--q", q, "evaluate the potts model at q = p/q");
  ts->callback([&] { action = [&](Context& c) { return twosum_cmd(c, left, right, glue, model, q); }; });

  std::string path;
  auto* delta = app.add_subcommand("delta", "support analysis");
  delta->require_subcommand(1);
  auto* dcheck = delta->add_subcommand("check", "convexity, exchange and flattening of a support");
  dcheck->add_option("file", path, "weight file or set-system file")->required();
  dcheck->callback([&] { action = [&](Context& c) { return delta_check(c, path); }; });

  std::string values, conditions;
  int m = -1, offset = 0;
  auto* seq = app.add_subcommand("seq", "sequence conditions");
  seq->require_subcommand(1);
  auto* scheck = seq->add_subcommand("check", "unimodality and log-concavity conditions");
  scheck->add_option("--values", values, "comma-separated nonnegative rationals")->required();
  scheck->add_option("--m", m, "ambient size for the binomially normalized condition");
  scheck->add_option("--offset", offset, "index of the first value");
  scheck->add_option("--conditions", conditions, "comma-separated subset of a0..a6");
  scheck->callback([&] { action = [&](Context&) { return seq_check(values, m, offset, conditions); }; });

  auto* mason = app.add_subcommand("mason", "log-concavity report for independent-set counts");
  mason->add_option("matroid", spec)->required();
  mason->callback([&] { action = [&](Context& c) { return mason_cmd(c, spec); }; });

  ProbeArgs pa;
  std::string probe_kind;
  auto* probe = app.add_subcommand("probe", "empirical probes of open conjectures and inequalities");
  probe->add_option("kind", probe_kind, "symmetrize|conjecture|association|triple|qc|negterms")
      ->required()
      ->check(CLI::IsMember({"symmetrize", "conjecture", "association", "triple", "qc", "negterms"}));
  probe->add_option("input", pa.input, "weight file or matroid")->required();
  probe->add_option("--model", pa.model, "bases|indep|span|potts");
  probe->add_option("--q", pa.q, "evaluate the potts model at q = p/q");
  probe->add_option("--pair", pa.pair, "pair e,f");
  probe->add_option("--triple", pa.triple, "triple e,f,g");
  probe->add_option("--parts", pa.parts, "two parts 'a,b,c|d,e,f'");
  probe->add_option("--point", pa.point, "comma-separated positive point");
  probe->add_option("--samples", pa.samples, "sample budget");
  probe->add_option("--steps", pa.steps, "bisection steps");
  probe->callback([&] { action = [&](Context& c) { return probe_cmd(c, probe_kind, pa); }; });

  std::string only;
  std::vector<std::string> weight_files;
  bool list = false;
  auto* corpus = app.add_subcommand("corpus", "run the built-in regression corpus");
  corpus->add_option("--only", only, "comma-separated case names");
  corpus->add_option("--weights", weight_files, "extra weight files");
  corpus->add_flag("--list", list, "list case names");
  corpus->callback([&] { action = [&](Context& c) { return corpus_cmd(c, only, weight_files, list); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << RFORGE_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Context ctx;
  Outcome outcome;
  try {
    ctx.seed = parse_seed(seed_text);
    if (!action) throw InputError("missing subcommand");
    outcome = action(ctx);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  json report;
  report["schema"] = 1;
  report["tool"] = "rayleigh-forge";
  report["version"] = RFORGE_VERSION;
  report["command"] = args;
  std::ostringstream seed_hex;
  seed_hex << "0x" << std::hex << std::uppercase << ctx.seed;
  report["seed"] = seed_hex.str();
  json inputs = json::array();
  for (const auto& in : ctx.inputs) inputs.push_back({{"name", in.name}, {"sha256", sha256_hex(in.bytes)}});
  report["inputs"] = inputs;
  report["result"] = outcome.result;
  report["exit_code"] = outcome.code;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  report["timing"] = {{"elapsed_ms", ms}};

  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) {
      err << "error: cannot write '" << json_path << "'\n";
      return kExitInput;
    }
    f << report.dump(2) << "\n";
  }
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& line : outcome.lines) out << line << "\n";
  }
  return outcome.code;
}

}  // namespace rforge
