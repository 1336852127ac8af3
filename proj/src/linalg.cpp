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

#include "rforge/linalg.hpp"

#include <utility>

#include "rforge/errors.hpp"

namespace rforge {

namespace {

void require_square(const RatMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw InputError("matrix is not square");
}

}  // namespace

Rat determinant(RatMatrix a) {
  require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return Rat(1);
  Rat sign(1);
  Rat prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Rat(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = Rat(0);
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

RatMatrix principal_submatrix(const RatMatrix& a, Mask rows) {
  RatMatrix out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!has(rows, static_cast<int>(i))) continue;
    std::vector<Rat> row;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (has(rows, static_cast<int>(j))) row.push_back(a[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    std::swap(inv[c], inv[p]);
    Rat piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::vector<Rat> characteristic_polynomial(const RatMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = Rat(1);
  RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * next[l][i];
    c[n - k] = -tr / Rat(static_cast<long>(k));
    m = std::move(next);
  }
  return c;
}

}  // namespace rforge
