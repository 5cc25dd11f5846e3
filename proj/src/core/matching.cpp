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

#include "tmat/matching.hpp"

#include <algorithm>

#include "tmat/errors.hpp"

namespace tmat {

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

class Augmenter {
 public:
  explicit Augmenter(const Presentation& pres)
      : pres_(pres),
        element_of_set_(pres.size(), kFree),
        visited_(pres.size(), false) {}

  bool augment(std::size_t x) {
    std::fill(visited_.begin(), visited_.end(), false);
    return try_element(x);
  }

  const std::vector<std::size_t>& element_of_set() const {
    return element_of_set_;
  }

 private:
  bool try_element(std::size_t x) {
    const auto sets = pres_.sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!sets[i].contains(x) || visited_[i]) continue;
      visited_[i] = true;
      if (element_of_set_[i] == kFree || try_element(element_of_set_[i])) {
        element_of_set_[i] = x;
        return true;
      }
    }
    return false;
  }

  const Presentation& pres_;
  std::vector<std::size_t> element_of_set_;
  std::vector<bool> visited_;
};

}  // namespace

Matching maximum_matching(const Presentation& pres, ElementSet x) {
  if (!pres.ground().contains_set(x)) {
    throw DomainError("subset is not contained in the ground set");
  }
  Augmenter aug(pres);
  Matching out;
  out.set_of.assign(pres.ground().size(), std::nullopt);
  for (std::size_t e : x) {
    if (aug.augment(e)) ++out.size;
  }
  const auto& element_of_set = aug.element_of_set();
  for (std::size_t i = 0; i < element_of_set.size(); ++i) {
    if (element_of_set[i] != kFree) out.set_of[element_of_set[i]] = i;
  }
  return out;
}

std::size_t max_partial_transversal(const Presentation& pres, ElementSet x) {
  if (!pres.ground().contains_set(x)) {
    throw DomainError("subset is not contained in the ground set");
  }
  Augmenter aug(pres);
  std::size_t size = 0;
  for (std::size_t e : x) {
    if (aug.augment(e)) ++size;
    if (size == pres.size()) break;
  }
  return size;
}

bool has_transversal(const Presentation& pres) {
  return max_partial_transversal(pres, pres.ground().full()) == pres.size();
}

}  // namespace tmat
