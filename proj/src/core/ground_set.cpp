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

#include "tmat/ground_set.hpp"

#include <stdexcept>

#include "tmat/errors.hpp"

namespace tmat {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() > ElementSet::kMaxElements) {
    throw std::invalid_argument("ground set has " +
                                std::to_string(labels_.size()) +
                                " elements; at most 64 are supported");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw std::invalid_argument("ground set label " + std::to_string(i) +
                                  " is empty");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate ground set label '" +
                                  labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError("'" + std::string(label) + "' is not in the ground set");
}

ElementSet GroundSet::set_of(std::span<const std::string> labels) const {
  ElementSet out;
  for (const auto& l : labels) out = out.with(index_of(l));
  return out;
}

ElementSet GroundSet::set_of(
    std::initializer_list<std::string_view> labels) const {
  ElementSet out;
  for (auto l : labels) out = out.with(index_of(l));
  return out;
}

std::vector<std::string> GroundSet::labels_of(ElementSet set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (std::size_t i : set) out.push_back(labels_.at(i));
  return out;
}

std::string GroundSet::format(ElementSet set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set) {
    if (!first) out += ',';
    out += labels_.at(i);
    first = false;
  }
  out += '}';
  return out;
}

GroundSet GroundSet::subset(ElementSet keep) const {
  return GroundSet(labels_of(keep & full()));
}

}  // namespace tmat
