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

#pragma once

#include <optional>
#include <vector>

#include "rforge/arith.hpp"
#include "rforge/ground.hpp"

namespace rforge {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Fraction-free (Bareiss) elimination.
Rat determinant(RatMatrix a);
/// Submatrix on the rows and columns in `rows`.
RatMatrix principal_submatrix(const RatMatrix& a, Mask rows);
/// nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);
/// Coefficients c_0..c_n of det(t I - A), c_n = 1 (Faddeev-LeVerrier).
std::vector<Rat> characteristic_polynomial(const RatMatrix& a);

}  // namespace rforge
