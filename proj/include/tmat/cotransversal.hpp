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
#include <vector>

#include "tmat/element_set.hpp"
#include "tmat/matroid.hpp"
#include "tmat/matroid_ops.hpp"
#include "tmat/presentation.hpp"
#include "tmat/rank_oracle.hpp"

namespace tmat {

// A flat F whose restriction has no coloops (equivalently, a union of
// circuits).
bool is_cyclic_flat(const RankOracle& m, ElementSet f);

// All cyclic flats, sorted by (size, bits).
std::vector<ElementSet> cyclic_flats(const RankOracle& m,
                                     std::size_t max_ground = kDefaultMaxGround);

// Cyclic flats of m = M[A]*, found by testing only unions of sets of A.
// Complete because every cyclic flat of a co-transversal matroid is such a
// union. `dual_presentation` must be a presentation of m* over m's ground
// set; it is not re-verified here.
std::vector<ElementSet> cyclic_flats_from_unions(
    const RankOracle& m, const Presentation& dual_presentation,
    std::size_t max_ground = kDefaultMaxGround);

// Mason's alpha on the cyclic flats of a matroid, in (size, bits) order.
class AlphaTable {
 public:
  struct Entry {
    ElementSet flat;
    int alpha = 0;
  };

  AlphaTable() = default;
  explicit AlphaTable(std::vector<Entry> entries)
      : entries_(std::move(entries)) {}

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<int> find(ElementSet flat) const;

 private:
  std::vector<Entry> entries_;
};

AlphaTable alpha_table(const RankOracle& m,
                       std::size_t max_ground = kDefaultMaxGround);

// alpha(X) = |X| - r(X) - sum of alpha(F) over cyclic flats F strictly
// inside X. `memo` must be alpha_table(m).
int alpha(const RankOracle& m, ElementSet x, const AlphaTable& memo);
int alpha(const RankOracle& m, ElementSet x,
          std::size_t max_ground = kDefaultMaxGround);

struct CotransversalVerdict {
  bool cotransversal = true;
  // On failure, a smallest X with alpha(X) < 0 (ties by bit pattern).
  std::optional<ElementSet> witness;
  int witness_alpha = 0;
};

// Checks alpha(X) >= 0 on all 2^|E| subsets.
CotransversalVerdict is_cotransversal(
    const RankOracle& m, std::size_t max_ground = kDefaultMaxGround);

// Presentation of m* in which each cyclic flat F of m appears alpha(F)
// times, in (size, bits) order. Coloops of m lie in no cyclic flat and so in
// no set. Throws PreconditionError carrying the witness if m is not
// co-transversal.
Presentation alpha_presentation(const RankOracle& m,
                                std::size_t max_ground = kDefaultMaxGround);

// (cl*(A_1), ..., cl*(A_r)). Requires |A| = r(M).
Presentation maximal_presentation(const TransversalMatroid& m);

// Replaces A_i by B_i after checking that cl*(B_i) = cl*(A_i) and that every
// B containing B_i but not A_i has r*(B) < |B| - |{j : A_j within B}|. The
// result is verified to present the same matroid. Requires |A| = r(M).
// Rejections throw PreconditionError whose witness is the offending B.
Presentation exchange_set(const TransversalMatroid& m, std::size_t i,
                          ElementSet replacement,
                          std::size_t max_ground = kDefaultMaxGround);

}  // namespace tmat
