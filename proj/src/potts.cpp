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


#include "rforge/potts.hpp"

#include <limits>

#include "rforge/rng.hpp"

namespace rforge {

Model Model::parse(const std::string& tag, const std::optional<Rat>& q) {
  if (tag == "bases") return bases();
  if (tag == "indep" || tag == "independent") return independent();
  if (tag == "span" || tag == "spanning") return spanning();
  if (tag == "potts") return q ? potts_at(*q) : potts_symbolic();
  throw InputError("unknown model '" + tag + "' (expected bases, indep, span or potts)");
}

std::string Model::name() const {
  switch (kind) {
    case ModelKind::Bases: return "bases";
    case ModelKind::Independent: return "indep";
    case ModelKind::Spanning: return "span";
    case ModelKind::Potts: return q0 ? "potts(q=" + q0->str() + ")" : "potts(symbolic)";
  }
  return "?";
}

const RatPoly& PartitionPoly::rat() const {
  if (!std::holds_alternative<RatPoly>(poly)) throw InputError("symbolic-q polynomial where rational coefficients are required");
  return std::get<RatPoly>(poly);
}

const LaurentPoly& PartitionPoly::laurent() const {
  if (!std::holds_alternative<LaurentPoly>(poly)) throw InputError("expected a symbolic-q polynomial");
  return std::get<LaurentPoly>(poly);
}

const GroundSet& PartitionPoly::ground() const {
  return std::visit([](const auto& p) -> const GroundSet& { return p.ground(); }, poly);
}

namespace {

void require_potts_size(const Matroid& m) {
  if (m.size() > kPottsLimit)
    throw InputError("Potts polynomial needs 2^m terms; m = " + std::to_string(m.size()) + " exceeds " +
                     std::to_string(kPottsLimit));
}

bool is_uniform(const Matroid& m) { return m.provenance().rfind("uniform", 0) == 0; }

template <class F>
void each_rank(const Matroid& m, F&& f) {
  const Mask full = m.ground().full();
  const bool uni = is_uniform(m);
  const int r = m.rank();
  for (Mask s = 0;; ++s) {
    f(s, uni ? std::min(r, popcount(s)) : m.rank(s));
    if (s == full) break;
  }
}

}  // namespace

LaurentPoly potts_symbolic(const Matroid& m) {
  require_potts_size(m);
  LaurentPoly out(m.ground());
  each_rank(m, [&](Mask s, int r) { out.add_term(s, LaurentQ::monomial(-r)); });
  return out;
}

RatPoly potts_evaluated(const Matroid& m, const Rat& q0) {
  require_potts_size(m);
  if (q0.sign() <= 0) throw InputError("Potts parameter q must be positive");
  std::vector<Rat> powers;
  for (int k = 0; k <= m.rank(); ++k) powers.push_back(q0.pow(-k));
  RatPoly out(m.ground());
  each_rank(m, [&](Mask s, int r) { out.add_term(s, powers[static_cast<std::size_t>(r)]); });
  return out;
}

PartitionPoly potts_poly(const Matroid& m, const Model& model) {
  if (model.kind != ModelKind::Potts) throw InputError("potts_poly needs the Potts model");
  if (model.q0) return {model, potts_evaluated(m, *model.q0), m};
  return {model, potts_symbolic(m), m};
}

PartitionPoly model_poly(const Matroid& m, const Model& model) {
  switch (model.kind) {
    case ModelKind::Bases: return {model, enumerate(m, Family::Bases).indicator(), m};
    case ModelKind::Independent: return {model, enumerate(m, Family::Independent).indicator(), m};
    case ModelKind::Spanning: return {model, enumerate(m, Family::Spanning).indicator(), m};
    case ModelKind::Potts: break;
  }
  require_potts_size(m);
  // Rank oracle on every subset, without the uniform shortcut.
  const Mask full = m.ground().full();
  if (model.q0) {
    if (model.q0->sign() <= 0) throw InputError("Potts parameter q must be positive");
    RatPoly out(m.ground());
    for (Mask s = 0;; ++s) {
      out.add_term(s, model.q0->pow(-m.rank(s)));
      if (s == full) break;
    }
    return {model, out, m};
  }
  LaurentPoly out(m.ground());
  for (Mask s = 0;; ++s) {
    out.add_term(s, LaurentQ::monomial(-m.rank(s)));
    if (s == full) break;
  }
  return {model, out, m};
}

RatPoly eval_q(const LaurentPoly& p, const Rat& q0) {
  RatPoly out(p.ground());
  for (const auto& [s, c] : p.terms()) out.add_term(s, c.eval(q0));
  return out;
}

SymSeq uniform_potts_sequence(int m, int r, const Rat& q0) {
  if (r < 0 || r > m) throw InputError("uniform matroid needs 0 <= r <= m");
  if (q0.sign() <= 0) throw InputError("Potts parameter q must be positive");
  std::vector<Rat> a;
  for (int k = 0; k <= m; ++k) a.push_back(q0.pow(-std::min(r, k)));
  return SymSeq(std::move(a));
}

bool PottsSlices::all_hold() const {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

namespace {

LaurentPoly lift(const LaurentPoly& p, const GroundSet& ground, int g, bool with_g, const LaurentQ& factor) {
  LaurentPoly out(ground);
  for (const auto& [s, c] : p.terms()) out.add_term(expand(s, bit(g)) | (with_g ? bit(g) : 0), c * factor);
  return out;
}

LaurentPoly div_one_minus_q(const LaurentPoly& p) {
  LaurentPoly out(p.ground());
  for (const auto& [s, c] : p.terms()) out.add_term(s, c.div_one_minus_q());
  return out;
}

}  // namespace

PottsSlices potts_slices(const Matroid& m, int g, std::uint64_t seed, int samples) {
  if (g < 0 || g >= m.size()) throw InputError("unknown element index");
  PottsSlices out;
  out.g = g;
  out.loop = m.is_loop(g);
  out.coloop = m.is_coloop(g);
  const LaurentQ q = LaurentQ::monomial(1);
  const LaurentQ qinv = LaurentQ::monomial(-1);

  LaurentPoly z = potts_symbolic(m);
  out.deleted = z.deletion(g);
  out.contracted = z.contraction(g).scaled(out.loop ? LaurentQ(1) : q);
  auto report = [&](std::string name, bool holds, std::string detail = "") {
    out.reports.push_back({std::move(name), holds, std::move(detail)});
  };

  report("deletion is Z(M\\g)", out.deleted == potts_symbolic(delete_element(m, g)));
  report("contraction is Z(M/g)", out.contracted == potts_symbolic(contract_element(m, g)));
  if (out.loop) {
    report("slice identities", true, "skipped: g is a loop");
    return out;
  }

  const GroundSet& e = m.ground();
  const GroundSet rest = e.without(bit(g));
  LaurentPoly rebuilt = lift(out.deleted, e, g, false, LaurentQ(1)) + lift(out.contracted, e, g, true, qinv);
  report("(a) M = M^g + q^-1 y_g M_g", rebuilt == z);

  LaurentPoly open_part(rest), closed_part(rest);
  for (Mask s = 0;; ++s) {
    Mask full_s = expand(s, bit(g));
    (m.in_closure(full_s, g) ? closed_part : open_part).add_term(s, LaurentQ::monomial(-m.rank(full_s)));
    if (s == rest.full()) break;
  }
  report("(b) M^g - q^-1 M_g = (1 - q^-1) sum over g not in cl(S)",
         out.deleted - out.contracted.scaled(qinv) == open_part.scaled(LaurentQ(1) - qinv));
  report("(c) (M^g - M_g)/(1 - q) = sum over g in cl(S)", div_one_minus_q(out.deleted - out.contracted) == closed_part);

  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(g)));
  bool strict_ok = true, weak_ok = true;
  std::string first_bad;
  for (int i = 0; i < samples; ++i) {
    Rat q0 = open_unit_rational(rng);
    Point y;
    for (int k = 0; k < rest.size(); ++k) y.push_back(log_uniform_dyadic(rng));
    Rat del = eval_q(out.deleted, q0).eval(y);
    Rat con = eval_q(out.contracted, q0).eval(y);
    bool strict = q0 * del < con;
    bool weak = out.coloop ? con == del : con < del;
    if ((!strict || !weak) && first_bad.empty()) first_bad = "fails at q=" + q0.str();
    strict_ok = strict_ok && strict;
    weak_ok = weak_ok && weak;
  }
  report("(d) q M^g < M_g", strict_ok, first_bad);
  report(out.coloop ? "(d) M_g = M^g (coloop)" : "(d) M_g < M^g (not a coloop)", weak_ok, first_bad);
  return out;
}

namespace {

template <class C, class Div>
SubsetPoly<C> compose(const SubsetPoly<C>& l, const SubsetPoly<C>& m, int gl, int gm, ModelKind kind, const C& q,
                      Div div) {
  SubsetPoly<C> ld = l.deletion(gl), lc = l.contraction(gl);
  SubsetPoly<C> md = m.deletion(gm), mc = m.contraction(gm);
  if (kind == ModelKind::Potts) {
    lc = lc.scaled(q);
    mc = mc.scaled(q);
  }
  auto prod = [](const SubsetPoly<C>& a, const SubsetPoly<C>& b) { return multiply_disjoint(a, b); };
  switch (kind) {
    case ModelKind::Bases: return prod(ld, mc) + prod(lc, md);
    case ModelKind::Independent: return prod(ld, mc) + prod(lc, md) - prod(lc, mc);
    case ModelKind::Spanning: return prod(ld, mc) + prod(lc, md) - prod(ld, md);
    case ModelKind::Potts: break;
  }
  SubsetPoly<C> first = prod(ld, md) - div(prod(ld - lc, md - mc));
  SubsetPoly<C> second = div(prod(ld, md).scaled(-q) + prod(ld, mc) + prod(lc, md) - prod(lc, mc));
  if (!(first == second)) throw InternalError("the two closed forms of the Potts two-sum disagree");
  return first;
}

}  // namespace

PartitionPoly twosum_compose(const PartitionPoly& l, const PartitionPoly& m, const std::string& g, const Model& model) {
  if (!(l.model == model) || !(m.model == model))
    throw InputError("two-sum inputs must both carry the " + model.name() + " model");
  int gl = l.ground().index_of(g);
  int gm = m.ground().index_of(g);
  for (const auto& lab : l.ground().labels())
    if (lab != g && m.ground().find(lab)) throw InputError("two_sum: ground sets share '" + lab + "' besides '" + g + "'");
  if (l.source && (l.source->is_loop(gl) || l.source->is_coloop(gl)))
    throw InputError("two_sum: '" + g + "' is a loop or coloop of the left matroid");
  if (m.source && (m.source->is_loop(gm) || m.source->is_coloop(gm)))
    throw InputError("two_sum: '" + g + "' is a loop or coloop of the right matroid");

  PartitionPoly out{model, RatPoly(), std::nullopt};
  if (l.source && m.source) out.source = two_sum(*l.source, *m.source, g);
  if (model.symbolic()) {
    out.poly = compose<LaurentQ>(l.laurent(), m.laurent(), gl, gm, model.kind, LaurentQ::monomial(1),
                                 [](const LaurentPoly& p) { return div_one_minus_q(p); });
    return out;
  }
  Rat q = model.q0.value_or(Rat(0));
  if (model.kind == ModelKind::Potts && q == Rat(1)) throw InputError("the Potts two-sum formula needs q != 1");
  out.poly = compose<Rat>(l.rat(), m.rat(), gl, gm, model.kind, q,
                          [q](const RatPoly& p) { return p.scaled(Rat(1) / (Rat(1) - q)); });
  return out;
}

SetSystem dominant_support(const Matroid& m, int alpha_halves) {
  if (alpha_halves < 0 || alpha_halves > 2) throw InputError("alpha must be 0, 1/2 or 1");
  if (m.size() > kEnumerationLimit) throw InputError("ground set too large to enumerate");
  const int r = m.rank();
  int best = std::numeric_limits<int>::max();
  std::vector<Mask> members;
  const Mask full = m.ground().full();
  for (Mask s = 0;; ++s) {
    int twice = (2 - alpha_halves) * r - 2 * m.rank(s) + alpha_halves * popcount(s);
    if (twice < best) {
      best = twice;
      members.clear();
    }
    if (twice == best) members.push_back(s);
    if (s == full) break;
  }
  return SetSystem(m.ground(), std::move(members));
}

}  // namespace rforge
