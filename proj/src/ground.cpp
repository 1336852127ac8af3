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

#include "rforge/ground.hpp"

#include <algorithm>
#include <set>

#include "rforge/errors.hpp"

namespace rforge {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGround)) {
    throw InputError("ground set has " + std::to_string(labels_.size()) + " elements; the limit is " +
                     std::to_string(kMaxGround));
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty element label");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(int m, int first) {
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(std::to_string(first + i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int GroundSet::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw InputError("unknown element '" + std::string(label) + "'");
  return *i;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (has(m, i)) out.push_back(labels_[static_cast<std::size_t>(i)]);
  return out;
}

std::string GroundSet::format(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(m)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

GroundSet GroundSet::without(Mask removed) const {
  std::vector<std::string> keep;
  for (int i = 0; i < size(); ++i)
    if (!has(removed, i)) keep.push_back(labels_[static_cast<std::size_t>(i)]);
  return GroundSet(std::move(keep));
}

GroundSet GroundSet::union_with(const GroundSet& other) const {
  std::vector<std::string> all = labels_;
  for (const auto& l : other.labels_)
    if (!find(l)) all.push_back(l);
  return GroundSet(std::move(all));
}

Embedding::Embedding(const GroundSet& from, const GroundSet& to) {
  for (const auto& l : from.labels()) target_.push_back(to.index_of(l));
}

Mask Embedding::operator()(Mask m) const {
  Mask out = 0;
  for (std::size_t i = 0; i < target_.size(); ++i)
    if (has(m, static_cast<int>(i))) out |= bit(target_[i]);
  return out;
}

}  // namespace rforge
