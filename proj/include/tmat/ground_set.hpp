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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tmat/element_set.hpp"

namespace tmat {

// Named, ordered ground set. Labels are nonempty and pairwise distinct;
// positions follow declaration order.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws std::invalid_argument on an empty or duplicate label, or when
  // there are more than ElementSet::kMaxElements labels.
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  ElementSet full() const { return ElementSet::first(labels_.size()); }

  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::span<const std::string> labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws DomainError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  // Throws DomainError for an unknown label.
  ElementSet set_of(std::span<const std::string> labels) const;
  ElementSet set_of(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(ElementSet set) const;
  // "{a,b,c}" in declaration order.
  std::string format(ElementSet set) const;

  bool contains_set(ElementSet set) const { return set.is_subset_of(full()); }

  // Ground set obtained by keeping only the positions in `keep`, in order.
  GroundSet subset(ElementSet keep) const;

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace tmat
