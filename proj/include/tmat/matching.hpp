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
#include <vector>

#include "tmat/element_set.hpp"
#include "tmat/presentation.hpp"

namespace tmat {

// Maximum matching between a subset of elements and the sets of a
// presentation; element x may be matched to set i iff x is in A_i.
struct Matching {
  std::size_t size = 0;
  // set_of[x] is the set matched to element x, for x in the queried subset.
  std::vector<std::optional<std::size_t>> set_of;
};

// Simple augmenting-path matching. Elements are augmented in ascending
// position and candidate sets are tried in ascending index, so the returned
// matching is a deterministic function of the input.
Matching maximum_matching(const Presentation& pres, ElementSet x);

// Size of a largest partial transversal of `pres` contained in `x`, i.e. the
// rank of x in M[pres]. Throws DomainError if x leaves the ground set.
std::size_t max_partial_transversal(const Presentation& pres, ElementSet x);

// True iff every set of `pres` can be matched to a distinct element.
bool has_transversal(const Presentation& pres);

}  // namespace tmat
