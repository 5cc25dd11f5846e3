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

#include "tmat/rank_oracle.hpp"

#include <vector>

#include "tmat/errors.hpp"

namespace tmat {

namespace {

// Maps positions of a sub-ground-set back to the parent's positions.
std::function<ElementSet(ElementSet)> make_lift(ElementSet kept) {
  std::vector<std::size_t> positions(kept.begin(), kept.end());
  return [positions = std::move(positions)](ElementSet x) {
    ElementSet out;
    for (std::size_t i : x) out = out.with(positions[i]);
    return out;
  };
}

}  // namespace

RankOracle::RankOracle(GroundSet ground, RankFunction rank)
    : ground_(std::make_shared<const GroundSet>(std::move(ground))),
      rank_(std::move(rank)) {
  full_rank_ = rank_(ground_->full());
}

RankOracle::RankOracle(const TransversalMatroid& m)
    : ground_(std::make_shared<const GroundSet>(m.ground())),
      full_rank_(m.full_rank()) {
  auto held = std::make_shared<const TransversalMatroid>(m);
  rank_ = [held](ElementSet x) { return held->rank(x); };
}

RankOracle::RankOracle(const MinorMatroid& m)
    : ground_(std::make_shared<const GroundSet>(m.ground())) {
  auto held = std::make_shared<const MinorMatroid>(m);
  rank_ = [held](ElementSet x) { return held->rank(x); };
  full_rank_ = rank_(ground_->full());
}

int RankOracle::rank(ElementSet x) const {
  if (!ground_->contains_set(x)) {
    throw DomainError("subset leaves the ground set");
  }
  return rank_(x);
}

RankOracle dual(const RankOracle& m) {
  const ElementSet full = m.full();
  const int full_rank = m.full_rank();
  return RankOracle(m.ground(), [m, full, full_rank](ElementSet x) {
    return static_cast<int>(x.size()) + m.rank(x.complement_in(full)) -
           full_rank;
  });
}

RankOracle restriction(const RankOracle& m, ElementSet x) {
  if (!m.ground().contains_set(x)) {
    throw DomainError("restriction set leaves the ground set");
  }
  auto lift = make_lift(x);
  return RankOracle(m.ground().subset(x),
                    [m, lift](ElementSet y) { return m.rank(lift(y)); });
}

RankOracle contraction(const RankOracle& m, ElementSet c) {
  if (!m.ground().contains_set(c)) {
    throw DomainError("contraction set leaves the ground set");
  }
  const ElementSet kept = m.full() - c;
  auto lift = make_lift(kept);
  const int rank_c = m.rank(c);
  return RankOracle(m.ground().subset(kept), [m, lift, c, rank_c](ElementSet y) {
    return m.rank(lift(y) | c) - rank_c;
  });
}

}  // namespace tmat
