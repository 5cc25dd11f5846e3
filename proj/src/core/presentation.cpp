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

#include "tmat/presentation.hpp"

#include <algorithm>

#include "tmat/errors.hpp"

namespace tmat {

Presentation::Presentation(GroundSet ground, std::vector<ElementSet> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!ground_.contains_set(sets_[i])) {
      throw DomainError("set " + std::to_string(i) +
                        " mentions a position outside the ground set");
    }
  }
}

ElementSet Presentation::union_of(std::span<const std::size_t> indices) const {
  ElementSet out;
  for (std::size_t i : indices) out |= sets_.at(i);
  return out;
}

std::vector<std::size_t> Presentation::sets_within(ElementSet x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].is_subset_of(x)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Presentation::sets_containing(std::size_t e) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].contains(e)) out.push_back(i);
  }
  return out;
}

Presentation Presentation::select(std::span<const std::size_t> indices) const {
  std::vector<ElementSet> sets;
  sets.reserve(indices.size());
  for (std::size_t i : indices) sets.push_back(sets_.at(i));
  return Presentation(ground_, std::move(sets));
}

bool same_multiset(const Presentation& a, const Presentation& b) {
  if (!(a.ground() == b.ground()) || a.size() != b.size()) return false;
  std::vector<ElementSet> x(a.sets().begin(), a.sets().end());
  std::vector<ElementSet> y(b.sets().begin(), b.sets().end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace tmat
