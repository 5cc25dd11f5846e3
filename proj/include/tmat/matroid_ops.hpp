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
#include <vector>

#include "tmat/element_set.hpp"
#include "tmat/matroid.hpp"
#include "tmat/rank_oracle.hpp"

namespace tmat {

// Exhaustive operations enumerate 2^|E| subsets and refuse larger ground
// sets unless the caller raises the bound explicitly.
inline constexpr std::size_t kDefaultMaxGround = 16;

// Throws SizeBoundError if |ground| > max_ground.
void require_ground_bound(const GroundSet& ground, std::size_t max_ground,
                          const char* operation);

// Rank of every subset, indexed by bit pattern. Built per call.
class RankTable {
 public:
  RankTable(const RankOracle& m, std::size_t max_ground = kDefaultMaxGround);

  int operator()(ElementSet x) const { return ranks_[x.bits()]; }
  std::size_t ground_size() const { return n_; }
  ElementSet full() const { return ElementSet::first(n_); }

  ElementSet closure(ElementSet x) const;
  bool is_flat(ElementSet x) const { return closure(x) == x; }

 private:
  std::size_t n_;
  std::vector<int> ranks_;
};

bool is_independent(const RankOracle& m, ElementSet x);

// {x : r(X u x) = r(X)}.
ElementSet closure(const RankOracle& m, ElementSet x);

// r*(X) = |X| + r(E - X) - r(E).
int dual_rank(const RankOracle& m, ElementSet x);

// Closure in M*.
ElementSet dual_closure(const RankOracle& m, ElementSet x);

// Presentation (A_1 n X, ..., A_r n X) over the ground set X.
TransversalMatroid restriction(const TransversalMatroid& m, ElementSet x);

// True iff the two matroids have the same labels and agree in rank on every
// subset. Labels are matched by name, so declaration order may differ.
// Throws PreconditionError on a label mismatch and SizeBoundError above the
// bound.
bool matroids_equal(const RankOracle& a, const RankOracle& b,
                    std::size_t max_ground = kDefaultMaxGround);

struct LoopsAndColoops {
  ElementSet loops;
  ElementSet coloops;
};
LoopsAndColoops loops_and_coloops(const RankOracle& m);

// Indices of the lexicographically first r(M)-subset of the sets of M's
// presentation that presents M. Identity when |A| = r(M) already.
std::vector<std::size_t> rank_sized_subfamily(
    const TransversalMatroid& m, std::size_t max_ground = kDefaultMaxGround);

// M re-presented by exactly r(M) of its sets (see rank_sized_subfamily).
TransversalMatroid normalize_presentation(
    const TransversalMatroid& m, std::size_t max_ground = kDefaultMaxGround);

}  // namespace tmat
