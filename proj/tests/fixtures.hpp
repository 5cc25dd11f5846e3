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

#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "tmat/matroid.hpp"
#include "tmat/presentation.hpp"
#include "tmat/rank_oracle.hpp"

namespace tmat::test {

inline GroundSet letters(std::string_view names) {
  std::vector<std::string> labels;
  for (char c : names) labels.emplace_back(1, c);
  return GroundSet(std::move(labels));
}

// Presentation over single-letter elements, one string per set.
inline Presentation pres(std::string_view ground,
                         std::initializer_list<std::string_view> sets) {
  const GroundSet g = letters(ground);
  std::vector<ElementSet> out;
  for (auto s : sets) {
    ElementSet x;
    for (char c : s) x = x.with(g.index_of(std::string(1, c)));
    out.push_back(x);
  }
  return Presentation(g, std::move(out));
}

inline ElementSet set_of(const GroundSet& g, std::string_view letters) {
  ElementSet x;
  for (char c : letters) x = x.with(g.index_of(std::string(1, c)));
  return x;
}

inline TransversalMatroid three_pairs() {
  return TransversalMatroid(pres("euvwxyz", {"euv", "ewx", "eyz"}));
}

inline TransversalMatroid overlapping_chain() {
  return TransversalMatroid(
      pres("estuvwxyz", {"estuv", "euvwx", "ewxyz"}));
}

inline TransversalMatroid four_copies() {
  return TransversalMatroid(
      pres("ewxyz", {"ewxyz", "ewxyz", "ewxyz", "ewxyz"}));
}

// Cycle matroid of a graph on `vertices` vertices; elements are edges.
inline RankOracle cycle_matroid(
    std::size_t vertices,
    std::vector<std::pair<std::size_t, std::size_t>> edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return RankOracle(GroundSet(std::move(labels)),
                    [vertices, edges](ElementSet x) {
                      std::vector<std::size_t> parent(vertices);
                      std::iota(parent.begin(), parent.end(), std::size_t{0});
                      auto root = [&](std::size_t v) {
                        while (parent[v] != v) v = parent[v];
                        return v;
                      };
                      int rank = 0;
                      for (std::size_t i : x) {
                        const auto a = root(edges[i].first);
                        const auto b = root(edges[i].second);
                        if (a != b) {
                          parent[a] = b;
                          ++rank;
                        }
                      }
                      return rank;
                    });
}

// Edges ab ac ad bc bd cd of K4, labelled a..f.
inline RankOracle k4() {
  return cycle_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace tmat::test
