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

#include <functional>
#include <memory>

#include "tmat/element_set.hpp"
#include "tmat/ground_set.hpp"
#include "tmat/matroid.hpp"

namespace tmat {

// Type-erased matroid given by its rank function. Cheap to copy; the rank
// function must be pure, and every view built from it stays immutable.
class RankOracle {
 public:
  using RankFunction = std::function<int(ElementSet)>;

  RankOracle(GroundSet ground, RankFunction rank);
  RankOracle(const TransversalMatroid& m);  // NOLINT(runtime/explicit)
  RankOracle(const MinorMatroid& m);        // NOLINT(runtime/explicit)

  const GroundSet& ground() const { return *ground_; }
  ElementSet full() const { return ground_->full(); }
  std::size_t size() const { return ground_->size(); }
  int full_rank() const { return full_rank_; }

  // Throws DomainError if x leaves the ground set.
  int rank(ElementSet x) const;

 private:
  std::shared_ptr<const GroundSet> ground_;
  RankFunction rank_;
  int full_rank_ = 0;
};

// M*: r*(X) = |X| + r(E - X) - r(E).
RankOracle dual(const RankOracle& m);

// M | X, re-indexed onto the labels of X in declaration order.
RankOracle restriction(const RankOracle& m, ElementSet x);

// M / C, re-indexed onto the remaining labels in declaration order.
RankOracle contraction(const RankOracle& m, ElementSet c);

}  // namespace tmat
