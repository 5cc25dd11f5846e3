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

#include "tmat/matroid.hpp"

#include "tmat/errors.hpp"
#include "tmat/matching.hpp"

namespace tmat {

TransversalMatroid::TransversalMatroid(Presentation presentation)
    : presentation_(std::move(presentation)) {
  full_rank_ = static_cast<int>(
      max_partial_transversal(presentation_, presentation_.ground().full()));
}

int TransversalMatroid::rank(ElementSet x) const {
  if (!ground().contains_set(x)) {
    throw DomainError("subset " + std::to_string(x.bits()) +
                      " leaves the ground set");
  }
  return static_cast<int>(max_partial_transversal(presentation_, x));
}

MinorMatroid::MinorMatroid(TransversalMatroid base, ElementSet deleted,
                           ElementSet contracted)
    : base_(std::move(base)), deleted_(deleted), contracted_(contracted) {
  const GroundSet& g = base_.ground();
  if (!g.contains_set(deleted_) || !g.contains_set(contracted_)) {
    throw DomainError("minor removes elements outside the ground set");
  }
  if (deleted_.intersects(contracted_)) {
    throw PreconditionError("deleted and contracted sets intersect",
                            deleted_ & contracted_);
  }
  const ElementSet kept = g.full() - deleted_ - contracted_;
  ground_ = g.subset(kept);
  for (std::size_t i : kept) base_position_.push_back(i);
  contracted_rank_ = base_.rank(contracted_);
}

MinorMatroid MinorMatroid::contraction(const TransversalMatroid& base,
                                       std::string_view element) {
  return MinorMatroid(base, ElementSet{},
                      ElementSet::singleton(base.ground().index_of(element)));
}

MinorMatroid MinorMatroid::deletion(const TransversalMatroid& base,
                                    std::string_view element) {
  return MinorMatroid(base,
                      ElementSet::singleton(base.ground().index_of(element)),
                      ElementSet{});
}

ElementSet MinorMatroid::lift(ElementSet x) const {
  if (!ground_.contains_set(x)) {
    throw DomainError("subset leaves the minor's ground set");
  }
  ElementSet out;
  for (std::size_t i : x) out = out.with(base_position_[i]);
  return out;
}

int MinorMatroid::rank(ElementSet x) const {
  return base_.rank(lift(x) | contracted_) - contracted_rank_;
}

}  // namespace tmat
