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

// Multiaffine polynomials sum_S c_S y^S over a labeled ground set, and
// polynomials with every exponent at most two. Coefficients are Rat or
// LaurentQ.
//
// Slice notation: for a multiaffine Z and disjoint sets C, D of elements,
// Z_C^D is the coefficient of y^C after setting y_d = 0 for d in D. It lives
// on the ground set with C and D removed. In particular Z^e = Z|_{y_e=0} and
// Z_e = dZ/dy_e, so that Z = Z^e + y_e Z_e.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rforge/arith.hpp"
#include "rforge/errors.hpp"
#include "rforge/ground.hpp"

namespace rforge {

using Point = std::vector<Rat>;

template <class C>
class QuadPoly;

template <class C>
class SubsetPoly {
 public:
  using Terms = std::map<Mask, C>;

  SubsetPoly() = default;
  explicit SubsetPoly(GroundSet ground) : ground_(std::move(ground)) {}
  SubsetPoly(GroundSet ground, const Terms& terms) : ground_(std::move(ground)) {
    for (const auto& [s, c] : terms) add_term(s, c);
  }
  static SubsetPoly constant(GroundSet ground, const C& c) {
    SubsetPoly p(std::move(ground));
    p.add_term(0, c);
    return p;
  }

  const GroundSet& ground() const { return ground_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  C coeff(Mask s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Accumulates c into the coefficient of y^s, dropping it if it cancels.
  void add_term(Mask s, const C& c) {
    if (s & ~ground_.full()) throw InputError("monomial outside the ground set");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Z_C^D with C = contract, D = remove.
  SubsetPoly slice(Mask contract, Mask remove) const {
    if ((contract & remove) != 0) throw InputError("slice: contracted and deleted sets overlap");
    Mask gone = contract | remove;
    if (gone & ~ground_.full()) throw InputError("slice: unknown element");
    SubsetPoly out(ground_.without(gone));
    for (const auto& [s, c] : terms_)
      if ((s & contract) == contract && (s & remove) == 0) out.terms_.emplace(compress(s & ~contract, gone), c);
    return out;
  }
  SubsetPoly deletion(int e) const { return slice(0, bit(e)); }
  SubsetPoly contraction(int e) const { return slice(bit(e), 0); }

  /// Substitutes y_i = point[i].
  C eval(const Point& point) const {
    check_point(point);
    C acc(0);
    for (const auto& [s, c] : terms_) acc += c * C(monomial_value(s, point));
    return acc;
  }

  /// Substitutes the listed variables, keeping the rest symbolic.
  SubsetPoly partial_eval(Mask vars, const Point& point) const {
    check_point(point);
    SubsetPoly out(ground_.without(vars));
    for (const auto& [s, c] : terms_) out.add_term(compress(s & ~vars, vars), c * C(monomial_value(s & vars, point)));
    return out;
  }

  /// Copy of this polynomial on a superset ground, matched by label.
  SubsetPoly embed(const GroundSet& target) const {
    Embedding emb(ground_, target);
    SubsetPoly out(target);
    for (const auto& [s, c] : terms_) out.terms_.emplace(emb(s), c);
    return out;
  }

  /// f_k = sum of coefficients over |S| = k, for k = 0..m.
  std::vector<C> grading() const {
    std::vector<C> f(static_cast<std::size_t>(ground_.size()) + 1, C(0));
    for (const auto& [s, c] : terms_) f[static_cast<std::size_t>(popcount(s))] += c;
    return f;
  }

  SubsetPoly operator-() const {
    SubsetPoly out = *this;
    for (auto& [s, c] : out.terms_) c = -c;
    return out;
  }
  SubsetPoly& operator+=(const SubsetPoly& o) {
    require_same_ground(o);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  SubsetPoly& operator-=(const SubsetPoly& o) { return *this += -o; }
  friend SubsetPoly operator+(SubsetPoly a, const SubsetPoly& b) { return a += b; }
  friend SubsetPoly operator-(SubsetPoly a, const SubsetPoly& b) { return a -= b; }
  SubsetPoly scaled(const C& k) const {
    SubsetPoly out(ground_);
    for (const auto& [s, c] : terms_) out.add_term(s, c * k);
    return out;
  }
  friend bool operator==(const SubsetPoly&, const SubsetPoly&) = default;

  void require_same_ground(const SubsetPoly& o) const {
    if (!(ground_ == o.ground_)) throw InputError("ground-set mismatch");
  }

 private:
  void check_point(const Point& point) const {
    if (point.size() != static_cast<std::size_t>(ground_.size()))
      throw InputError("evaluation point has the wrong dimension");
  }
  static Rat monomial_value(Mask s, const Point& point) {
    Rat v(1);
    for (Mask t = s; t != 0; t &= t - 1) v *= point[static_cast<std::size_t>(std::countr_zero(t))];
    return v;
  }

  GroundSet ground_;
  Terms terms_;
};

/// Monomial with exponents in {0,1,2}: y^support * y^squared.
struct QuadMono {
  Mask support = 0;
  Mask squared = 0;  // subset of support
  friend auto operator<=>(const QuadMono&, const QuadMono&) = default;
};

template <class C>
class QuadPoly {
 public:
  using Terms = std::map<QuadMono, C>;

  QuadPoly() = default;
  explicit QuadPoly(GroundSet ground) : ground_(std::move(ground)) {}
  static QuadPoly from(const SubsetPoly<C>& p) {
    QuadPoly out(p.ground());
    for (const auto& [s, c] : p.terms()) out.terms_.emplace(QuadMono{s, 0}, c);
    return out;
  }

  const GroundSet& ground() const { return ground_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  C coeff(QuadMono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(QuadMono m, const C& c) {
    if ((m.squared & ~m.support) != 0 || (m.support & ~ground_.full()) != 0)
      throw InputError("malformed quadratic monomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  C eval(const Point& point) const {
    if (point.size() != static_cast<std::size_t>(ground_.size()))
      throw InputError("evaluation point has the wrong dimension");
    C acc(0);
    for (const auto& [m, c] : terms_) {
      Rat v(1);
      for (int i = 0; i < ground_.size(); ++i) {
        if (has(m.squared, i)) v *= point[static_cast<std::size_t>(i)] * point[static_cast<std::size_t>(i)];
        else if (has(m.support, i)) v *= point[static_cast<std::size_t>(i)];
      }
      acc += c * C(v);
    }
    return acc;
  }

  /// Sets y_e = 0.
  QuadPoly deletion(int e) const {
    QuadPoly out(ground_.without(bit(e)));
    for (const auto& [m, c] : terms_)
      if (!has(m.support, e)) out.terms_.emplace(QuadMono{compress(m.support, bit(e)), compress(m.squared, bit(e))}, c);
    return out;
  }

  /// Coefficient of y_e^1. Rejected when y_e occurs squared: that would be a
  /// formal derivative rather than a slice.
  QuadPoly contraction(int e) const {
    QuadPoly out(ground_.without(bit(e)));
    for (const auto& [m, c] : terms_) {
      if (has(m.squared, e)) throw InputError("contraction of a squared variable");
      if (has(m.support, e))
        out.terms_.emplace(QuadMono{compress(m.support & ~bit(e), bit(e)), compress(m.squared, bit(e))}, c);
    }
    return out;
  }

  QuadPoly embed(const GroundSet& target) const {
    Embedding emb(ground_, target);
    QuadPoly out(target);
    for (const auto& [m, c] : terms_) out.terms_.emplace(QuadMono{emb(m.support), emb(m.squared)}, c);
    return out;
  }

  /// Multiplies by y^support * y^squared; every exponent must stay at most two.
  QuadPoly times_monomial(QuadMono mono) const {
    QuadPoly out(ground_);
    for (const auto& [m, c] : terms_) out.add_term(product(m, mono), c);
    return out;
  }

  QuadPoly operator-() const {
    QuadPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  QuadPoly& operator+=(const QuadPoly& o) {
    require_same_ground(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  QuadPoly& operator-=(const QuadPoly& o) { return *this += -o; }
  friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
  friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
  friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
    a.require_same_ground(b);
    QuadPoly out(a.ground_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(product(ma, mb), ca * cb);
    return out;
  }
  QuadPoly scaled(const C& k) const {
    QuadPoly out(ground_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * k);
    return out;
  }
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

  void require_same_ground(const QuadPoly& o) const {
    if (!(ground_ == o.ground_)) throw InputError("ground-set mismatch");
  }

  static QuadMono product(QuadMono a, QuadMono b) {
    if ((a.squared & b.support) != 0 || (b.squared & a.support) != 0)
      throw InputError("product exceeds degree two in some variable");
    return QuadMono{a.support | b.support, a.squared | b.squared | (a.support & b.support)};
  }

 private:
  GroundSet ground_;
  Terms terms_;
};

using RatPoly = SubsetPoly<Rat>;
using RatQuad = QuadPoly<Rat>;

/// Exact product of two multiaffine polynomials on the same ground set.
template <class C>
QuadPoly<C> multiply(const SubsetPoly<C>& p, const SubsetPoly<C>& q) {
  p.require_same_ground(q);
  QuadPoly<C> out(p.ground());
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) out.add_term(QuadMono{a | b, a & b}, ca * cb);
  return out;
}

/// Product of polynomials on disjoint ground sets, living on their union.
template <class C>
SubsetPoly<C> multiply_disjoint(const SubsetPoly<C>& p, const SubsetPoly<C>& q) {
  GroundSet u = p.ground().union_with(q.ground());
  if (u.size() != p.ground().size() + q.ground().size()) throw InputError("ground sets are not disjoint");
  Embedding ep(p.ground(), u), eq(q.ground(), u);
  SubsetPoly<C> out(u);
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) out.add_term(ep(a) | eq(b), ca * cb);
  return out;
}

/// Product of two quadratic polynomials on disjoint ground sets.
template <class C>
QuadPoly<C> multiply_disjoint(const QuadPoly<C>& p, const QuadPoly<C>& q) {
  GroundSet u = p.ground().union_with(q.ground());
  if (u.size() != p.ground().size() + q.ground().size()) throw InputError("ground sets are not disjoint");
  return p.embed(u) * q.embed(u);
}

namespace detail {
inline void require_distinct(const GroundSet& g, std::initializer_list<int> elems) {
  Mask seen = 0;
  for (int e : elems) {
    if (e < 0 || e >= g.size()) throw InputError("unknown element index " + std::to_string(e));
    if (has(seen, e)) throw InputError("elements must be distinct");
    seen |= bit(e);
  }
}
}  // namespace detail

/// Rayleigh difference Z_e^f Z_f^e - Z_ef Z^ef on the ground set with e, f removed.
template <class C>
QuadPoly<C> rayleigh_diff(const SubsetPoly<C>& z, int e, int f) {
  detail::require_distinct(z.ground(), {e, f});
  return multiply(z.slice(bit(e), bit(f)), z.slice(bit(f), bit(e))) - multiply(z.slice(bit(e) | bit(f), 0), z.slice(0, bit(e) | bit(f)));
}

/// Theta Z{e,f|g}: the coefficient of y_g in Delta Z{e,f}, on E minus {e,f,g}.
template <class C>
QuadPoly<C> theta(const SubsetPoly<C>& z, int e, int f, int g) {
  detail::require_distinct(z.ground(), {e, f, g});
  auto sl = [&](Mask con, Mask del) { return z.slice(con, del); };
  Mask E = bit(e), F = bit(f), G = bit(g);
  return multiply(sl(E, F | G), sl(F | G, E)) + multiply(sl(F, E | G), sl(E | G, F)) -
         multiply(sl(G, E | F), sl(E | F, G)) - multiply(sl(E | F | G, 0), sl(0, E | F | G));
}

/// Coefficient of y^S in the result is the coefficient of y^(E\S) in z.
template <class C>
SubsetPoly<C> dualize(const SubsetPoly<C>& z) {
  SubsetPoly<C> out(z.ground());
  for (const auto& [s, c] : z.terms()) out.add_term(z.ground().full() & ~s, c);
  return out;
}

/// Exchangeable polynomial sum_k a_k e_k(y_1..y_m).
struct SymSeq {
  int m = 0;
  std::vector<Rat> a;  // length m + 1

  SymSeq() = default;
  explicit SymSeq(std::vector<Rat> entries);
  RatPoly to_poly(const GroundSet& ground) const;
  friend bool operator==(const SymSeq&, const SymSeq&) = default;
};

/// a_k = f_k / C(m, k).
SymSeq symmetrize(const RatPoly& z);

/// Reads a_k off a polynomial that is symmetric in all its variables.
/// Throws InputError if it is not.
SymSeq exchangeable_coefficients(const RatPoly& z);

/// Elementary symmetric values e_0..e_n of the given numbers.
std::vector<Rat> elementary_symmetric(const std::vector<Rat>& values);

/// Key (j, k): coefficient of m_[2^j 1^(k-j)].
using MonomialSymmetricExpansion = std::map<std::pair<int, int>, Rat>;

/// Throws InputError unless p is invariant under all adjacent transpositions.
MonomialSymmetricExpansion monomial_symmetric_expand(const RatQuad& p);
/// Inverse of monomial_symmetric_expand on the given ground set.
RatQuad monomial_symmetric_sum(const GroundSet& ground, const MonomialSymmetricExpansion& coeffs);
bool is_symmetric(const RatQuad& p);

using RatMatrix = std::vector<std::vector<Rat>>;

/// Principal-minor weights of a symmetric matrix A for which A or its
/// inverse has nonpositive off-diagonal entries and all principal minors of A
/// are positive. omega(empty) = 1.
RatPoly mmatrix_weights(const RatMatrix& a, const GroundSet& ground);
RatPoly mmatrix_weights(const RatMatrix& a);

/// Partition function from explicit weights; rejects negative weights and an
/// empty support.
RatPoly from_weights(const GroundSet& ground, const std::map<Mask, Rat>& weights);

/// True iff every stored coefficient is >= 0.
template <class Poly>
bool coefficients_nonnegative(const Poly& p) {
  for (const auto& [m, c] : p.terms())
    if (c.sign() < 0) return false;
  return true;
}

}  // namespace rforge
