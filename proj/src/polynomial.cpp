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

#include "rforge/polynomial.hpp"

#include "rforge/linalg.hpp"

namespace rforge {

namespace {

Mask swap_bits(Mask m, int i, int j) {
  bool bi = has(m, i), bj = has(m, j);
  if (bi == bj) return m;
  return m ^ (bit(i) | bit(j));
}

RatQuad transposed(const RatQuad& p, int i) {
  RatQuad out(p.ground());
  for (const auto& [mono, c] : p.terms())
    out.add_term(QuadMono{swap_bits(mono.support, i, i + 1), swap_bits(mono.squared, i, i + 1)}, c);
  return out;
}

}  // namespace

SymSeq::SymSeq(std::vector<Rat> entries) : a(std::move(entries)) {
  if (a.empty()) throw InputError("symmetric sequence needs at least one entry");
  m = static_cast<int>(a.size()) - 1;
}

RatPoly SymSeq::to_poly(const GroundSet& ground) const {
  if (ground.size() != m) throw InputError("symmetric sequence length does not match ground set");
  RatPoly out(ground);
  for (Mask s = 0; s <= ground.full(); ++s) {
    out.add_term(s, a[static_cast<std::size_t>(popcount(s))]);
    if (s == ground.full()) break;
  }
  return out;
}

SymSeq symmetrize(const RatPoly& z) {
  const int m = z.ground().size();
  std::vector<Rat> f = z.grading();
  for (int k = 0; k <= m; ++k) f[static_cast<std::size_t>(k)] /= binomial(m, k);
  return SymSeq(std::move(f));
}

SymSeq exchangeable_coefficients(const RatPoly& z) {
  const int m = z.ground().size();
  std::vector<Rat> a(static_cast<std::size_t>(m) + 1, Rat(0));
  for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(k)] = z.coeff(low_mask(k));
  SymSeq seq(a);
  if (!(seq.to_poly(z.ground()) == z)) throw InputError("polynomial is not symmetric in its variables");
  return seq;
}

std::vector<Rat> elementary_symmetric(const std::vector<Rat>& values) {
  std::vector<Rat> e(values.size() + 1, Rat(0));
  e[0] = Rat(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
  return e;
}

bool is_symmetric(const RatQuad& p) {
  for (int i = 0; i + 1 < p.ground().size(); ++i)
    if (!(transposed(p, i) == p)) return false;
  return true;
}

MonomialSymmetricExpansion monomial_symmetric_expand(const RatQuad& p) {
  if (!is_symmetric(p)) throw InputError("polynomial is not symmetric under adjacent transpositions");
  const int n = p.ground().size();
  MonomialSymmetricExpansion out;
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k; ++j) out[{j, k}] = p.coeff(QuadMono{low_mask(k), low_mask(j)});
  return out;
}

RatQuad monomial_symmetric_sum(const GroundSet& ground, const MonomialSymmetricExpansion& coeffs) {
  RatQuad out(ground);
  const Mask full = ground.full();
  for (Mask support = 0;; ++support) {
    // Enumerate squared as every submask of support.
    for (Mask sq = support;; sq = (sq - 1) & support) {
      auto it = coeffs.find({popcount(sq), popcount(support)});
      if (it != coeffs.end()) out.add_term(QuadMono{support, sq}, it->second);
      if (sq == 0) break;
    }
    if (support == full) break;
  }
  return out;
}

RatPoly mmatrix_weights(const RatMatrix& a) { return mmatrix_weights(a, GroundSet::numbered(static_cast<int>(a.size()))); }

RatPoly mmatrix_weights(const RatMatrix& a, const GroundSet& ground) {
  const std::size_t n = a.size();
  if (static_cast<int>(n) != ground.size()) throw InputError("matrix size does not match ground set");
  for (const auto& row : a)
    if (row.size() != n) throw InputError("matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) throw InputError("matrix is not symmetric");

  auto offdiag_nonpositive = [n](const RatMatrix& m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && m[i][j].sign() > 0) return false;
    return true;
  };

  RatPoly out(ground);
  for (Mask s = 0;; ++s) {
    Rat minor = determinant(principal_submatrix(a, s));
    if (minor.sign() <= 0) throw InputError("principal minor on " + ground.format(s) + " is not positive");
    out.add_term(s, minor);
    if (s == ground.full()) break;
  }
  if (!offdiag_nonpositive(a)) {
    auto inv = inverse(a);
    if (!inv || !offdiag_nonpositive(*inv))
      throw InputError("neither the matrix nor its inverse has nonpositive off-diagonal entries");
  }
  return out;
}

RatPoly from_weights(const GroundSet& ground, const std::map<Mask, Rat>& weights) {
  RatPoly out(ground);
  for (const auto& [s, w] : weights) {
    if (w.sign() < 0) throw InputError("negative weight on " + ground.format(s));
    out.add_term(s, w);
  }
  if (out.is_zero()) throw InputError("weight function has empty support");
  return out;
}

}  // namespace rforge
