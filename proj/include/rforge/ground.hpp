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

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rforge {

/// Subset of a ground set: bit i set iff element i is a member.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 30;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool has(Mask m, int i) { return (m >> i) & 1U; }
constexpr Mask low_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Drops the bits listed in `removed` and packs the remaining bits downward.
constexpr Mask compress(Mask m, Mask removed) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < 32; ++i) {
    if (has(removed, i)) continue;
    if (has(m, i)) out |= bit(j);
    ++j;
  }
  return out;
}

/// Inverse of compress: spreads the packed bits of `m` over the positions not in `removed`.
constexpr Mask expand(Mask m, Mask removed) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < 32 && (m >> j) != 0; ++i) {
    if (has(removed, i)) continue;
    if (has(m, j)) out |= bit(i);
    ++j;
  }
  return out;
}

/// Ordered, uniquely labeled ground set of at most kMaxGround elements.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  /// Elements labeled first, first+1, ..., first+m-1.
  static GroundSet numbered(int m, int first = 1);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return low_mask(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

  std::optional<int> find(std::string_view label) const;
  /// Throws InputError for an unknown label.
  int index_of(std::string_view label) const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  std::string format(Mask m) const;

  GroundSet without(Mask removed) const;
  /// This ground followed by the labels of `other` not already present.
  GroundSet union_with(const GroundSet& other) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Maps subsets of one ground set into another by label.
class Embedding {
 public:
  /// Every label of `from` must occur in `to`.
  Embedding(const GroundSet& from, const GroundSet& to);
  Mask operator()(Mask m) const;

 private:
  std::vector<int> target_;
};

}  // namespace rforge
