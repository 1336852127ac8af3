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


#include "rforge/rayleigh.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "rforge/potts.hpp"
#include "rforge/sequences.hpp"

namespace rforge {

std::string status_name(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::Refuted: return "Refuted";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

RatQuad SquareCertificate::to_poly(const GroundSet& ground) const {
  RatQuad out(ground);
  for (const auto& t : terms) {
    if (t.lambda.sign() <= 0) throw InputError("certificate multiplier must be positive");
    Mask a = ground.mask_of(t.a), b = ground.mask_of(t.b);
    if (a == b) throw InputError("certificate square has identical monomials");
    out.add_term(QuadMono{a, a}, t.lambda);
    out.add_term(QuadMono{a | b, a & b}, -(t.lambda * Rat(2)));
    out.add_term(QuadMono{b, b}, t.lambda);
  }
  return out;
}

namespace {

void require_positive_point(const RatPoly& z, const Point& point) {
  if (point.size() != static_cast<std::size_t>(z.ground().size()))
    throw InputError("evaluation point has the wrong dimension");
  for (const auto& v : point)
    if (v.sign() <= 0) throw InputError("evaluation point must be strictly positive");
}

Point random_point(SplitMix64& rng, int n) {
  Point p;
  p.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.push_back(log_uniform_dyadic(rng));
  return p;
}

int thread_cap() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RAYLEIGH_FORGE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, static_cast<int>(hw));
  }
  return static_cast<int>(hw);
}

}  // namespace

Rat rayleigh_value(const RatPoly& z, int e, int f, const Point& point) {
  detail::require_distinct(z.ground(), {e, f});
  if (point.size() != static_cast<std::size_t>(z.ground().size()))
    throw InputError("evaluation point has the wrong dimension");
  const Mask ef = bit(e) | bit(f);
  Rat part[4];  // indexed by [has e][has f]: Z^ef, Z_f^e, Z_e^f, Z_ef
  for (const auto& [s, c] : z.terms()) {
    Rat v = c;
    for (Mask t = s & ~ef; t != 0; t &= t - 1) v *= point[static_cast<std::size_t>(std::countr_zero(t))];
    part[(has(s, e) ? 2 : 0) + (has(s, f) ? 1 : 0)] += v;
  }
  return part[2] * part[1] - part[3] * part[0];
}

Rat covariance(const RatPoly& z, int e, int f, const Point& point) {
  require_positive_point(z, point);
  Rat zv = z.eval(point);
  if (zv.is_zero()) throw InputError("partition function vanishes at the point");
  const auto ue = static_cast<std::size_t>(e), uf = static_cast<std::size_t>(f);
  return -(point[ue] * point[uf] * rayleigh_value(z, e, f, point)) / (zv * zv);
}

RayleighVerdict check_pair(const RatPoly& z, int e, int f, const Strategy& strategy, std::uint64_t stream) {
  detail::require_distinct(z.ground(), {e, f});
  RayleighVerdict v;
  v.pair = Pair{std::min(e, f), std::max(e, f)};

  auto coefficient_verdict = [&](const RatQuad& residual, const std::string& method) {
    v.method = method;
    for (const auto& [mono, c] : residual.terms())
      if (c.sign() < 0) {
        v.status = Status::Inconclusive;
        v.detail = "negative coefficient " + c.str() + " on support " + residual.ground().format(mono.support) +
                   ", squared " + residual.ground().format(mono.squared);
        return v;
      }
    v.status = Status::Verified;
    v.detail = std::to_string(residual.size()) + " nonnegative coefficients";
    return v;
  };

  switch (strategy.kind) {
    case Strategy::Kind::Coeff:
      return coefficient_verdict(rayleigh_diff(z, e, f), "coeff-positive");
    case Strategy::Kind::Certificate: {
      RatQuad delta = rayleigh_diff(z, e, f);
      auto it = strategy.certificates.find(*v.pair);
      if (it == strategy.certificates.end()) return coefficient_verdict(delta, "coeff-positive");
      return coefficient_verdict(delta - it->second.to_poly(delta.ground()), "certificate");
    }
    case Strategy::Kind::Sample: break;
  }

  if (strategy.samples <= 0) throw InputError("sample budget must be positive");
  v.method = "sample";
  SplitMix64 rng(derive_seed(strategy.seed, stream));
  for (int i = 0; i < strategy.samples; ++i) {
    Point p = random_point(rng, z.ground().size());
    Rat d = rayleigh_value(z, e, f, p);
    ++v.samples;
    if (!v.min_sampled || d < *v.min_sampled) v.min_sampled = d;
    if (d.sign() < 0) {
      v.status = Status::Refuted;
      v.witness = std::move(p);
      v.value = d;
      v.detail = "Delta Z < 0 at sample " + std::to_string(i);
      return v;
    }
  }
  v.status = Status::Inconclusive;
  v.detail = "no negative value in " + std::to_string(v.samples) + " samples";
  return v;
}

AllVerdicts check_all(const RatPoly& z, const Strategy& strategy) {
  const int m = z.ground().size();
  std::vector<Pair> pairs;
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) pairs.emplace_back(e, f);

  std::vector<RayleighVerdict> results(pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
      try {
        results[i] = check_pair(z, pairs[i].first, pairs[i].second, strategy, i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  int nthreads = std::min<int>(thread_cap(), static_cast<int>(pairs.size()));
  std::vector<std::thread> threads;
  for (int t = 1; t < nthreads; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  AllVerdicts out;
  bool any_refuted = false, all_verified = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    any_refuted = any_refuted || results[i].status == Status::Refuted;
    all_verified = all_verified && results[i].status == Status::Verified;
    out.pairs.emplace_back(pairs[i], std::move(results[i]));
  }
  out.summary = any_refuted ? Status::Refuted : (all_verified ? Status::Verified : Status::Inconclusive);
  return out;
}

std::vector<Rat> diagonal_delta(const SymSeq& a) {
  if (a.m < 2) throw InputError("exchangeable polynomial needs at least two variables");
  const int n = a.m - 2;
  auto shifted = [&](int d) {
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = a.a[static_cast<std::size_t>(k + d)] * binomial(n, k);
    return out;
  };
  auto one = shifted(1), two = shifted(2), zero = shifted(0);
  std::vector<Rat> out(static_cast<std::size_t>(2 * n) + 1, Rat(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      out[static_cast<std::size_t>(i + j)] += one[static_cast<std::size_t>(i)] * one[static_cast<std::size_t>(j)] -
                                              two[static_cast<std::size_t>(i)] * zero[static_cast<std::size_t>(j)];
  return out;
}

Rat exchangeable_delta(const SymSeq& a, const std::vector<Rat>& rest) {
  if (a.m < 2) throw InputError("exchangeable Delta needs m >= 2");
  if (rest.size() != static_cast<std::size_t>(a.m - 2)) throw InputError("wrong number of remaining variables");
  std::vector<Rat> e = elementary_symmetric(rest);
  auto c = [&](int j) {
    Rat s(0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      std::size_t idx = static_cast<std::size_t>(j) + k;
      if (idx < a.a.size()) s += a.a[idx] * e[k];
    }
    return s;
  };
  Rat c1 = c(1);
  return c1 * c1 - c(0) * c(2);
}

RayleighVerdict exchangeable_check(const SymSeq& a) {
  bool nonzero = false;
  for (const auto& v : a.a) {
    if (v.sign() < 0) throw InputError("exchangeable coefficients must be nonnegative");
    nonzero = nonzero || !v.is_zero();
  }
  if (!nonzero) throw InputError("exchangeable coefficients are all zero");

  RayleighVerdict v;
  v.method = "exchangeable";
  Seq seq(a.a);
  ConditionResult lc = check_condition(seq, Condition::A2);
  ConditionResult nz = check_condition(seq, Condition::A0);
  if (lc.holds && nz.holds) {
    v.status = Status::Verified;
    v.detail = "coefficients are log-concave with no internal zeros";
    return v;
  }
  v.status = Status::Refuted;
  v.index = lc.holds ? nz.witness : lc.witness;
  v.detail = lc.holds ? nz.detail : lc.detail;

  // y_i = 1/t below the pair (k, k+1), y_j = t above it, t = 2^-j or 2^j.
  const int m = a.m;
  std::vector<int> order;
  if (v.index && *v.index >= 1 && *v.index <= m - 1) order.push_back(*v.index);
  for (int k = 1; k <= m - 1; ++k)
    if (!v.index || k != *v.index) order.push_back(k);
  for (int k : order)
    for (int j = 0; j <= 40; ++j)
      for (int sgn : {-1, 1}) {
        Rat t = Rat::dyadic(1, sgn * j);
        std::vector<Rat> rest;
        for (int i = 0; i < k - 1; ++i) rest.push_back(Rat(1) / t);
        for (int i = k + 1; i < m; ++i) rest.push_back(t);
        Rat d = exchangeable_delta(a, rest);
        if (d.sign() < 0) {
          v.pair = Pair{k - 1, k};
          v.witness.clear();
          for (int i = 0; i < k - 1; ++i) v.witness.push_back(Rat(1) / t);
          v.witness.push_back(Rat(1));
          v.witness.push_back(Rat(1));
          for (int i = k + 1; i < m; ++i) v.witness.push_back(t);
          v.value = d;
          return v;
        }
      }
  v.detail += "; no explicit witness found on the search grid";
  return v;
}

SymmetrizationReport symmetrize_and_check(const RatPoly& z) {
  SymmetrizationReport rep;
  rep.seq = symmetrize(z);
  rep.original = check_all(z, Strategy::coeff());
  rep.symmetrized = exchangeable_check(rep.seq);
  rep.counterexample = rep.original.summary == Status::Verified && rep.symmetrized.status == Status::Refuted;
  if (rep.counterexample)
    rep.note = "Z is coefficientwise Rayleigh but its symmetrization is not: counterexample to the symmetrization conjecture";
  else if (rep.original.summary == Status::Verified)
    rep.note = "Z and its symmetrization are both Rayleigh";
  else
    rep.note = "Z is not coefficientwise verified; no conclusion about the symmetrization conjecture";
  return rep;
}

ConjectureProbe conjecture_probe(const RatPoly& z, int e, int f, int samples, std::uint64_t seed) {
  const int m = z.ground().size();
  if (m < 3) throw InputError("conjecture probe needs m >= 3");
  detail::require_distinct(z.ground(), {e, f});
  SymSeq whole = symmetrize(z);
  std::vector<SymSeq> single;
  for (int x = 0; x < m; ++x) single.push_back(symmetrize(z.contraction(x)));
  std::map<Pair, SymSeq> doubles;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) doubles[{a, b}] = symmetrize(z.slice(bit(a) | bit(b), 0));

  auto on_rest = [](const SymSeq& s, const std::vector<Rat>& el) {
    Rat acc(0);
    for (std::size_t k = 0; k < el.size() && k < s.a.size(); ++k) acc += s.a[k] * el[k];
    return acc;
  };

  ConjectureProbe out;
  SplitMix64 rng(seed);
  const Pair ef{std::min(e, f), std::max(e, f)};
  for (int i = 0; i < samples; ++i) {
    ProbePoint pt;
    pt.y = random_point(rng, m - 2);
    std::vector<Rat> el = elementary_symmetric(pt.y);
    std::vector<Rat> zx;
    for (const auto& s : single) zx.push_back(on_rest(s, el));
    pt.ztilde12 = on_rest(whole, el);
    pt.z_e = zx[static_cast<std::size_t>(e)];
    pt.z_f = zx[static_cast<std::size_t>(f)];
    pt.z_ef = on_rest(doubles.at(ef), el);
    pt.margin = pt.z_e * pt.z_f - pt.z_ef * pt.ztilde12;
    for (const auto& [ab, s] : doubles)
      pt.pair_sum += zx[static_cast<std::size_t>(ab.first)] * zx[static_cast<std::size_t>(ab.second)] -
                     on_rest(s, el) * pt.ztilde12;
    if (i == 0 || pt.margin < out.min_margin) out.min_margin = pt.margin;
    if (i == 0 || pt.pair_sum < out.min_pair_sum) out.min_pair_sum = pt.pair_sum;
    out.points.push_back(std::move(pt));
  }
  return out;
}

AssociationReport negative_association_check(const RatPoly& z, Mask part1, Mask part2, const Point& point) {
  require_positive_point(z, point);
  if ((part1 & part2) != 0) throw InputError("parts must be disjoint");
  if ((part1 | part2) & ~z.ground().full()) throw InputError("part outside the ground set");
  const int k1 = popcount(part1), k2 = popcount(part2);
  if (k1 > 3 || k2 > 3) throw InputError("negative association check is limited to parts of size 3");
  if (k1 == 0 || k2 == 0) throw InputError("parts must be nonempty");

  const std::size_t n1 = std::size_t{1} << k1, n2 = std::size_t{1} << k2;
  std::vector<std::vector<Rat>> joint(n1, std::vector<Rat>(n2, Rat(0)));
  Rat total(0);
  auto local = [](Mask s, Mask part) {
    Mask out = 0;
    int j = 0;
    for (Mask t = part; t != 0; t &= t - 1, ++j)
      if (has(s, std::countr_zero(t))) out |= bit(j);
    return out;
  };
  for (const auto& [s, c] : z.terms()) {
    Rat w = c;
    for (Mask t = s; t != 0; t &= t - 1) w *= point[static_cast<std::size_t>(std::countr_zero(t))];
    joint[local(s, part1)][local(s, part2)] += w;
    total += w;
  }
  if (total.sign() <= 0) throw InputError("partition function is not positive at the point");

  auto upsets = [](int k) {
    std::vector<std::uint32_t> fams;
    const std::uint32_t nsets = 1U << k;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << nsets); ++fam) {
      bool up = true;
      for (std::uint32_t s = 0; s < nsets && up; ++s)
        if ((fam >> s) & 1U)
          for (int i = 0; i < k && up; ++i) up = (fam >> (s | (1U << i))) & 1U;
      if (up) fams.push_back(static_cast<std::uint32_t>(fam));
    }
    return fams;
  };
  auto f1 = upsets(k1), f2 = upsets(k2);
  auto members = [](std::uint32_t fam, Mask part) {
    std::vector<Mask> out;
    for (Mask s = 0; s < 32; ++s)
      if ((fam >> s) & 1U) out.push_back(expand(s, ~part) & part);
    return out;
  };

  AssociationReport rep;
  bool first = true;
  for (std::uint32_t a1 : f1)
    for (std::uint32_t a2 : f2) {
      Rat both(0), p1(0), p2(0);
      for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
          bool in1 = (a1 >> i) & 1U, in2 = (a2 >> j) & 1U;
          if (in1) p1 += joint[i][j];
          if (in2) p2 += joint[i][j];
          if (in1 && in2) both += joint[i][j];
        }
      Rat excess = both / total - (p1 / total) * (p2 / total);
      ++rep.pairs_checked;
      if (first || excess > rep.max_excess) rep.max_excess = excess;
      first = false;
      if (excess.sign() > 0) {
        ++rep.violations;
        if (rep.examples.size() < 5) rep.examples.emplace_back(members(a1, part1), members(a2, part2));
      }
    }
  return rep;
}

TripleReport triple_condition_check(const RatPoly& z, int e, int f, int g, int samples, bool assumed_rayleigh,
                                    std::uint64_t seed) {
  detail::require_distinct(z.ground(), {e, f, g});
  auto shift = [g](int x) { return x > g ? x - 1 : x; };
  RatQuad th = theta(z, e, f, g);
  RatQuad del = rayleigh_diff(z.deletion(g), shift(e), shift(f));
  RatQuad con = rayleigh_diff(z.contraction(g), shift(e), shift(f));
  if (!(del.ground() == th.ground()) || !(con.ground() == th.ground()))
    throw InternalError("triple check: slice ground sets disagree");

  TripleReport rep;
  rep.assumed_rayleigh = assumed_rayleigh;
  SplitMix64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    Point p = random_point(rng, th.ground().size());
    Rat t = th.eval(p);
    ++rep.points;
    if (t.sign() >= 0) continue;
    ++rep.negative_theta;
    Rat margin = Rat(4) * del.eval(p) * con.eval(p) - t * t;
    if (!rep.min_margin || margin < *rep.min_margin) rep.min_margin = margin;
    if (margin.sign() < 0) {
      if (rep.violations == 0) rep.first_violation = p;
      ++rep.violations;
    }
  }
  return rep;
}

QcBracket estimate_qc(const Matroid& m, int steps, int samples, std::uint64_t seed) {
  QcBracket out;
  const bool uniform = m.provenance().rfind("uniform", 0) == 0;
  out.exact = uniform;
  auto probe = [&](const Rat& q0, int step) {
    if (uniform) return exchangeable_check(uniform_potts_sequence(m.size(), m.rank(), q0)).status;
    RatPoly z = potts_evaluated(m, q0);
    AllVerdicts v = check_all(z, Strategy::coeff());
    if (v.summary == Status::Verified) return v.summary;
    return check_all(z, Strategy::sample(samples, derive_seed(seed, static_cast<std::uint64_t>(step)))).summary;
  };
  Rat lo(0), hi(1);
  bool refuted = false;
  for (int step = 0; step < steps; ++step) {
    Rat mid = (lo + hi) / Rat(2);
    Status s = probe(mid, step);
    out.probes.push_back({mid, s});
    if (s == Status::Refuted) {
      hi = mid;
      refuted = true;
    } else {
      lo = mid;
    }
  }
  out.lower = lo;
  if (refuted) out.upper = hi;
  return out;
}

std::vector<std::pair<QuadMono, Rat>> negative_terms(const RatPoly& z, int e, int f) {
  std::vector<std::pair<QuadMono, Rat>> out;
  RatQuad d = rayleigh_diff(z, e, f);
  for (const auto& [mono, c] : d.terms())
    if (c.sign() < 0) out.emplace_back(mono, c);
  return out;
}

}  // namespace rforge
