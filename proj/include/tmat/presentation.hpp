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
#include <span>
#include <vector>

#include "tmat/element_set.hpp"
#include "tmat/ground_set.hpp"

namespace tmat {

// Ordered family of subsets (A_1, ..., A_r) of a ground set. Duplicates and
// empty sets are allowed; an element in no set is a loop of M[A].
class Presentation {
 public:
  Presentation() = default;
  // Throws DomainError if a set mentions a position outside the ground set.
  Presentation(GroundSet ground, std::vector<ElementSet> sets);

  const GroundSet& ground() const { return ground_; }
  std::span<const ElementSet> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  ElementSet operator[](std::size_t i) const { return sets_.at(i); }

  // Union of the sets with indices in `indices`.
  ElementSet union_of(std::span<const std::size_t> indices) const;
  // Indices i with A_i a subset of x.
  std::vector<std::size_t> sets_within(ElementSet x) const;
  // Indices i with e in A_i, ascending.
  std::vector<std::size_t> sets_containing(std::size_t e) const;

  // Presentation made of the sets at `indices`, in that order.
  Presentation select(std::span<const std::size_t> indices) const;

  bool operator==(const Presentation&) const = default;

 private:
  GroundSet ground_;
  std::vector<ElementSet> sets_;
};

// True iff the two presentations are equal as multisets of sets over the
// same ground set.
bool same_multiset(const Presentation& a, const Presentation& b);

}  // namespace tmat
