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


// Generators and brute-force oracles shared by the unit tests. Nothing here
// calls into the code under test except the value types.

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "rforge/arith.hpp"
#include "rforge/matroid.hpp"
#include "rforge/polynomial.hpp"
#include "rforge/rng.hpp"

namespace rforge::testing {

inline Rat small_rat(SplitMix64& g, long span = 9) {
  long num = static_cast<long>(g.below(2 * span + 1)) - span;
  long den = 1 + static_cast<long>(g.below(6));
  return Rat(num, den);
}

inline Rat positive_rat(SplitMix64& g) { return Rat(1 + static_cast<long>(g.below(20)), 1 + static_cast<long>(g.below(7))); }

inline Point positive_point(SplitMix64& g, int m) {
  Point p;
  for (int i = 0; i < m; ++i) p.push_back(positive_rat(g));
  return p;
}

/// Random nonnegative weight function; density in percent.
inline RatPoly random_weights(SplitMix64& g, int m, int density = 50) {
  RatPoly p(GroundSet::numbered(m));
  for (Mask s = 0; s <= low_mask(m); ++s)
    if (static_cast<int>(g.below(100)) < density) p.add_term(s, Rat(1 + static_cast<long>(g.below(5))));
  if (p.is_zero()) p.add_term(0, Rat(1));
  return p;
}

/// Rank in the cycle matroid by union-find.
inline int forest_rank(const Graph& gr, Mask s) {
  std::vector<int> parent(static_cast<std::size_t>(gr.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int rank = 0;
  for (std::size_t i = 0; i < gr.edges.size(); ++i) {
    if (!has(s, static_cast<int>(i))) continue;
    int a = find(gr.edges[i].u), b = find(gr.edges[i].v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      ++rank;
    }
  }
  return rank;
}

/// Determinant by cofactor expansion.
inline Rat cofactor_det(const std::vector<std::vector<Rat>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rat(1);
  Rat acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rat>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    Rat term = a[0][j] * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Z_e^f Z_f^e - Z_ef Z^ef at a point, by evaluating Z with y_e, y_f pinned.
inline Rat rayleigh_by_pinning(const RatPoly& z, int e, int f, Point p) {
  auto at = [&](int ve, int vf) {
    p[static_cast<std::size_t>(e)] = Rat(ve);
    p[static_cast<std::size_t>(f)] = Rat(vf);
    return z.eval(p);
  };
  Rat z00 = at(0, 0), z10 = at(1, 0), z01 = at(0, 1), z11 = at(1, 1);
  Rat ze = z10 - z00, zf = z01 - z00, zef = z11 - z10 - z01 + z00;
  // Z_e^f = ze, Z_f^e = zf, Z^ef = z00.
  return ze * zf - zef * z00;
}

inline bool is_log_concave_no_internal_zeros(const std::vector<Rat>& a) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (!a[static_cast<std::size_t>(i)].is_zero()) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) return true;
  for (int i = first; i <= last; ++i)
    if (a[static_cast<std::size_t>(i)].is_zero()) return false;
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  return true;
}

}  // namespace rforge::testing
