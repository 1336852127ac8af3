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


#include "rforge/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "rforge/errors.hpp"
#include "rforge/rayleigh.hpp"
#include "rforge/sequences.hpp"

namespace rforge {

namespace {

/// Membership test; dense for small grounds.
class Membership {
 public:
  explicit Membership(const SetSystem& q) : q_(q) {
    if (q.ground().size() <= 24) {
      dense_.assign(std::size_t{1} << q.ground().size(), 0);
      for (Mask s : q.members()) dense_[s] = 1;
    }
  }
  bool operator()(Mask s) const {
    if (!dense_.empty()) return dense_[s] != 0;
    return q_.contains(s);
  }

 private:
  const SetSystem& q_;
  std::vector<char> dense_;
};

Mask submask_of_size_first(int k) { return low_mask(k); }

/// Next mask with the same popcount (Gosper's hack).
Mask next_same_popcount(Mask v) {
  Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

std::string fmt_triple(const GroundSet& g, Mask a, Mask b, int x) {
  return "A=" + g.format(a) + ", B=" + g.format(b) + ", x=" + g.label(x);
}

}  // namespace

SupportProfile profile(const SetSystem& q) {
  if (q.size() == 0) throw InputError("empty support");
  SupportProfile p{q.ground(), q, 0, q.ground().size()};
  for (Mask s : q.members()) {
    p.r = std::max(p.r, popcount(s));
    p.s = std::min(p.s, popcount(s));
  }
  return p;
}

SupportProfile support(const RatPoly& omega) {
  std::vector<Mask> members;
  for (const auto& [s, c] : omega.terms()) {
    if (c.sign() < 0) throw InputError("negative coefficient on " + omega.ground().format(s));
    members.push_back(s);
  }
  return profile(SetSystem(omega.ground(), std::move(members)));
}

std::optional<ConvexWitness> convexity_violation(const SetSystem& q) {
  Membership in(q);
  for (Mask s : q.members())
    for (Mask sp : q.members()) {
      if ((s & ~sp) != 0 || s == sp) continue;
      Mask diff = sp & ~s;
      std::unordered_set<Mask> seen{s};
      std::vector<Mask> frontier{s};
      while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask t : frontier)
          for (Mask x = diff & ~t; x != 0; x &= x - 1) {
            Mask u = t | (x & -x);
            if (!seen.insert(u).second) continue;
            if (!in(u)) return ConvexWitness{s, u, sp};
            next.push_back(u);
          }
        frontier = std::move(next);
      }
    }
  return std::nullopt;
}

std::optional<SeaWitness> sea_violation(const SetSystem& q) {
  Membership in(q);
  const int m = q.ground().size();
  const auto& mem = q.members();
  // ok[i][e]: the f with A ^ {e,f} a member.
  std::vector<std::vector<Mask>> ok(mem.size(), std::vector<Mask>(static_cast<std::size_t>(m), 0));
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (int e = 0; e < m; ++e)
      for (int f = 0; f < m; ++f)
        if (in(mem[i] ^ bit(e) ^ (f == e ? 0 : bit(f)))) ok[i][static_cast<std::size_t>(e)] |= bit(f);
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (Mask b : mem) {
      Mask d = mem[i] ^ b;
      for (Mask x = d; x != 0; x &= x - 1) {
        int e = std::countr_zero(x);
        if ((ok[i][static_cast<std::size_t>(e)] & d) == 0) return SeaWitness{mem[i], b, e};
      }
    }
  return std::nullopt;
}

std::optional<PairWitness> log_submodular_violation(const RatPoly& omega, int random_pairs, std::uint64_t seed) {
  for (const auto& [s, c] : omega.terms())
    if (c.sign() < 0) throw InputError("negative coefficient on " + omega.ground().format(s));
  const int m = omega.ground().size();
  auto fails = [](const Rat& ws, const Rat& wt, const Rat& wi, const Rat& wu) {
    if (wi.is_zero() || wu.is_zero()) return false;
    return ws * wt < wi * wu;
  };
  if (m <= 10) {
    const Mask n = Mask{1} << m;
    std::vector<Rat> w(n, Rat(0));
    for (const auto& [s, c] : omega.terms()) w[s] = c;
    for (Mask s = 0; s < n; ++s)
      for (Mask t = s + 1; t < n; ++t) {
        if ((s & ~t) == 0 || (t & ~s) == 0) continue;
        if (fails(w[s], w[t], w[s & t], w[s | t])) return PairWitness{s, t};
      }
    return std::nullopt;
  }
  SplitMix64 g(seed);
  const Mask full = omega.ground().full();
  for (int i = 0; i < random_pairs; ++i) {
    Mask s = static_cast<Mask>(g.next()) & full, t = static_cast<Mask>(g.next()) & full;
    if (fails(omega.coeff(s), omega.coeff(t), omega.coeff(s & t), omega.coeff(s | t))) return PairWitness{s, t};
  }
  return std::nullopt;
}

Flattening flatten(const RatPoly& omega) {
  SupportProfile p = support(omega);
  const int m = omega.ground().size();
  Flattening out;
  out.r = p.r;
  out.s = p.s;
  out.l = p.r - p.s;
  if (m + out.l > kMaxGround)
    throw InputError("flattening needs " + std::to_string(m + out.l) + " elements; the limit is " +
                     std::to_string(kMaxGround));
  std::string prefix;
  auto clash = [&] {
    for (int i = 1; i <= out.l; ++i)
      if (omega.ground().find(prefix + std::to_string(i))) return true;
    return false;
  };
  while (clash()) prefix += "_";
  std::vector<std::string> labels = omega.ground().labels();
  for (int i = 1; i <= out.l; ++i) labels.push_back(prefix + std::to_string(i));
  out.ground = GroundSet(labels);
  out.omega = RatPoly(out.ground);
  std::vector<Mask> members;
  for (const auto& [s, c] : omega.terms()) {
    int need = out.r - popcount(s);
    const Mask limit = Mask{1} << out.l;
    for (Mask f = submask_of_size_first(need); f < limit; f = next_same_popcount(f)) {
      Mask full = s | (f << m);
      out.omega.add_term(full, c);
      members.push_back(full);
      if (need == 0) break;
    }
  }
  out.members = SetSystem(out.ground, std::move(members));
  out.exchange_violation = find_exchange_violation(out.members);
  return out;
}

Flattening flatten(const SetSystem& q) { return flatten(q.indicator()); }

std::vector<Layer> layers(const SetSystem& q) {
  SupportProfile p = profile(q);
  std::vector<Layer> out;
  for (int k = p.s; k <= p.r; ++k) {
    std::vector<Mask> members;
    for (Mask s : q.members())
      if (popcount(s) == k) members.push_back(s);
    Layer layer{k, SetSystem(q.ground(), std::move(members)), std::nullopt};
    layer.members = layer.members.sorted();
    layer.exchange_violation = find_exchange_violation(layer.members);
    out.push_back(std::move(layer));
  }
  return out;
}

bool ExchangeProps::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.holds; });
}

ExchangeProps exchange_props_check(const SetSystem& q) {
  ExchangeProps out;
  out.vacuous = !is_convex(q) || !sea_check(q);
  Membership in(q);
  const GroundSet& g = q.ground();
  const int m = g.size();
  const auto& mem = q.members();
  const std::size_t n = mem.size();

  std::vector<Mask> up(n, 0), down(n, 0);
  std::vector<std::vector<Mask>> swap_out(n, std::vector<Mask>(static_cast<std::size_t>(m), 0));  // A - a + b
  std::vector<std::vector<Mask>> swap_in(n, std::vector<Mask>(static_cast<std::size_t>(m), 0));   // B - b + a
  for (std::size_t i = 0; i < n; ++i) {
    Mask a = mem[i];
    for (int x = 0; x < m; ++x) {
      if (has(a, x)) {
        if (in(a & ~bit(x))) down[i] |= bit(x);
        for (int y = 0; y < m; ++y)
          if (!has(a, y) && in((a & ~bit(x)) | bit(y))) swap_out[i][static_cast<std::size_t>(x)] |= bit(y);
      } else {
        if (in(a | bit(x))) up[i] |= bit(x);
        for (int y = 0; y < m; ++y)
          if (has(a, y) && in((a & ~bit(y)) | bit(x))) swap_in[i][static_cast<std::size_t>(x)] |= bit(y);
      }
    }
  }

  PropertyResult pa{"exchange-a", true, true, ""}, pb{"exchange-b", true, true, ""};
  PropertyResult pc{"exchange-c", true, true, ""}, pd{"exchange-d", true, true, ""};
  auto fail = [&](PropertyResult& r, Mask a, Mask b, std::optional<int> x) {
    if (!r.holds) return;
    r.holds = false;
    r.detail = x ? fmt_triple(g, a, b, *x) : "A=" + g.format(a) + ", B=" + g.format(b);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mask a = mem[i], b = mem[j];
      int ka = popcount(a), kb = popcount(b);
      Mask b_only = b & ~a, a_only = a & ~b;
      if (ka < kb) {
        if ((up[i] & b_only) == 0) fail(pa, a, b, std::nullopt);
        if ((down[j] & b_only) == 0) fail(pb, a, b, std::nullopt);
      } else if (ka == kb) {
        for (Mask x = a_only; x != 0; x &= x - 1) {
          int e = std::countr_zero(x);
          if ((swap_out[i][static_cast<std::size_t>(e)] & b_only) == 0) fail(pc, a, b, e);
          if ((swap_in[j][static_cast<std::size_t>(e)] & b_only) == 0) fail(pd, a, b, e);
        }
      }
    }

  auto extremal = [&](bool maximal) {
    PropertyResult r{maximal ? "maximal-equicardinal" : "minimal-equicardinal", true, true, ""};
    std::optional<Mask> first;
    for (Mask a : mem) {
      bool extreme = std::none_of(mem.begin(), mem.end(), [&](Mask b) {
        return b != a && (maximal ? (a & ~b) == 0 : (b & ~a) == 0);
      });
      if (!extreme) continue;
      if (!first) first = a;
      else if (popcount(*first) != popcount(a) && r.holds) {
        r.holds = false;
        r.detail = g.format(*first) + " and " + g.format(a);
      }
    }
    return r;
  };
  out.results = {pa, pb, pc, pd, extremal(true), extremal(false)};
  return out;
}

namespace {

PropertyResult full_support_result(const SetSystem& q) {
  PropertyResult r{"full-support", false, true, ""};
  const Mask full = q.ground().full();
  if (!q.contains(0) || !q.contains(full)) return r;
  r.applicable = true;
  std::size_t expected = std::size_t{1} << q.ground().size();
  if (q.size() != expected) {
    r.holds = false;
    r.detail = "support contains the empty set and E but has " + std::to_string(q.size()) + " members";
  }
  return r;
}

PropertyResult slice_property_result(const SetSystem& q) {
  PropertyResult r{"slice-property", true, true, ""};
  const GroundSet& g = q.ground();
  const int m = g.size();
  if (m > 10) {
    r.applicable = false;
    return r;
  }
  // exists[e][g] = f's such that some member contains e and g but not f.
  std::vector<Mask> exists(static_cast<std::size_t>(m * m), 0);
  for (Mask s : q.members())
    for (Mask x = s; x != 0; x &= x - 1)
      for (Mask y = s; y != 0; y &= y - 1) {
        int e = std::countr_zero(x), gg = std::countr_zero(y);
        if (e != gg) exists[static_cast<std::size_t>(e * m + gg)] |= g.full() & ~s;
      }
  for (Mask a : q.members())
    for (Mask b : q.members()) {
      if ((a & b) != 0 || popcount(b) < 2) continue;
      for (Mask x = b; x != 0; x &= x - 1)
        for (Mask y = x & (x - 1); y != 0; y &= y - 1) {
          int e = std::countr_zero(x), f = std::countr_zero(y);
          for (Mask z = a; z != 0; z &= z - 1) {
            int gg = std::countr_zero(z);
            bool ok = has(exists[static_cast<std::size_t>(e * m + gg)], f) || has(exists[static_cast<std::size_t>(f * m + gg)], e);
            if (!ok) {
              r.holds = false;
              r.detail = "A=" + g.format(a) + ", B=" + g.format(b) + ", e=" + g.label(e) + ", f=" + g.label(f) +
                         ", g=" + g.label(gg);
              return r;
            }
          }
        }
    }
  return r;
}

std::optional<Matroid> layer_matroid(const SetSystem& q, int k) {
  std::vector<Mask> members;
  for (Mask s : q.members())
    if (popcount(s) == k) members.push_back(s);
  try {
    return from_bases(SetSystem(q.ground(), std::move(members)));
  } catch (const InputError&) {
    return std::nullopt;
  }
}

bool same_members(const SetSystem& a, const SetSystem& b) { return a.sorted() == b.sorted(); }

}  // namespace

PropertyResult flattened_exchangeable(const RatPoly& omega) {
  SupportProfile p = support(omega);
  PropertyResult r{"flattened-exchangeable", true, true, ""};
  if (omega.ground().size() > 12) {
    r.applicable = false;
    return r;
  }
  Flattening fl = flatten(omega);
  const int m = omega.ground().size();
  RatPoly restricted = fl.omega.partial_eval(low_mask(m), Point(static_cast<std::size_t>(fl.ground.size()), Rat(1)));
  RayleighVerdict v = exchangeable_check(exchangeable_coefficients(restricted));
  std::vector<Rat> f = omega.grading();
  Seq seq(std::vector<Rat>(f.begin() + p.s, f.begin() + p.r + 1), m, p.s);
  bool logconcave = check_condition(seq, Condition::A2).holds && check_condition(seq, Condition::A0).holds;
  bool verified = v.status == Status::Verified;
  r.holds = logconcave == verified;
  r.detail = std::string("f-sequence (a-2,0) ") + (logconcave ? "holds" : "fails") + "; flattened polynomial " +
             status_name(v.status);
  return r;
}

std::vector<PropertyResult> support_suite(const RatPoly& omega) {
  SupportProfile p = support(omega);
  const SetSystem& q = p.support;
  const GroundSet& g = q.ground();
  std::vector<PropertyResult> out;

  PropertyResult convex{"convex", true, true, ""};
  if (auto w = convexity_violation(q)) {
    convex.holds = false;
    convex.detail = "S=" + g.format(w->s) + ", T=" + g.format(w->t) + ", S'=" + g.format(w->s_prime);
  }
  out.push_back(convex);

  PropertyResult sea{"sea", true, true, ""};
  if (auto w = sea_violation(q)) {
    sea.holds = false;
    sea.detail = fmt_triple(g, w->a, w->b, w->e);
  }
  out.push_back(sea);

  PropertyResult lsm{"log-submodular", true, true, ""};
  if (auto w = log_submodular_violation(omega)) {
    lsm.holds = false;
    lsm.detail = "S=" + g.format(w->s) + ", T=" + g.format(w->t);
  }
  out.push_back(lsm);

  out.push_back(full_support_result(q));
  out.push_back(slice_property_result(q));

  PropertyResult flat{"flatten-exchange", true, true, ""};
  if (g.size() + p.r - p.s > kMaxGround) {
    flat.applicable = false;
  } else {
    Flattening fl = flatten(q);
    flat.detail = "l=" + std::to_string(fl.l);
    if (!fl.exchange_ok()) {
      flat.holds = false;
      flat.detail += "; " + fmt_triple(fl.ground, fl.exchange_violation->a, fl.exchange_violation->b,
                                       fl.exchange_violation->element);
    }
  }
  out.push_back(flat);

  if (g.size() <= 10) {
    for (auto& r : exchange_props_check(q).results) out.push_back(r);
  } else {
    for (const char* name : {"exchange-a", "exchange-b", "exchange-c", "exchange-d", "maximal-equicardinal",
                             "minimal-equicardinal"})
      out.push_back({name, false, true, "ground set above 10 elements"});
  }

  PropertyResult homog{"homogeneous-bases", p.r == p.s, true, ""};
  if (homog.applicable) {
    if (auto w = find_exchange_violation(q)) {
      homog.holds = false;
      homog.detail = fmt_triple(g, w->a, w->b, w->element);
    }
  }
  out.push_back(homog);

  bool down_closed = std::all_of(q.members().begin(), q.members().end(), [&](Mask s) {
    for (Mask x = s; x != 0; x &= x - 1)
      if (!q.contains(s & ~(x & -x))) return false;
    return true;
  });
  PropertyResult dc{"down-closed-independent", down_closed, true, ""};
  if (down_closed) {
    auto mat = layer_matroid(q, p.r);
    if (!mat) {
      dc.holds = false;
      dc.detail = "largest members fail basis exchange";
    } else if (!same_members(enumerate(*mat, Family::Independent), q)) {
      dc.holds = false;
      dc.detail = "support differs from the independent sets of its largest members";
    }
  }
  out.push_back(dc);

  PropertyResult meet{"im-meet-sn", g.size() <= 20, true, ""};
  auto top = layer_matroid(q, p.r);
  auto bottom = layer_matroid(q, p.s);
  if (!meet.applicable) {
    meet.detail = "ground set above 20 elements";
  } else if (!top || !bottom) {
    meet.holds = false;
    meet.detail = std::string(!top ? "top" : "bottom") + " layer fails basis exchange";
  } else {
    std::vector<Mask> both;
    for (Mask s = 0;; ++s) {
      if (top->is_independent(s) && bottom->rank(s) == bottom->rank()) both.push_back(s);
      if (s == g.full()) break;
    }
    if (!same_members(SetSystem(g, std::move(both)), q)) {
      meet.holds = false;
      meet.detail = "support differs from I(top) meet S(bottom)";
    }
  }
  out.push_back(meet);

  out.push_back(flattened_exchangeable(omega));
  return out;
}

}  // namespace rforge
