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

#include "tmat/matroid_ops.hpp"

#include <numeric>
#include <string>

#include "tmat/errors.hpp"
#include "tmat/matching.hpp"

namespace tmat {

void require_ground_bound(const GroundSet& ground, std::size_t max_ground,
                          const char* operation) {
  if (ground.size() > max_ground) {
    throw SizeBoundError(std::string(operation) + ": ground set has " +
                         std::to_string(ground.size()) +
                         " elements, above the exhaustive bound of " +
                         std::to_string(max_ground));
  }
}

RankTable::RankTable(const RankOracle& m, std::size_t max_ground)
    : n_(m.size()) {
  require_ground_bound(m.ground(), max_ground, "rank table");
  ranks_.resize(std::size_t{1} << n_);
  for (std::uint64_t bits = 0; bits < ranks_.size(); ++bits) {
    ranks_[bits] = m.rank(ElementSet::from_bits(bits));
  }
}

ElementSet RankTable::closure(ElementSet x) const {
  const int r = (*this)(x);
  ElementSet out = x;
  for (std::size_t i : full() - x) {
    if ((*this)(x.with(i)) == r) out = out.with(i);
  }
  return out;
}

bool is_independent(const RankOracle& m, ElementSet x) {
  return m.rank(x) == static_cast<int>(x.size());
}

ElementSet closure(const RankOracle& m, ElementSet x) {
  const int r = m.rank(x);
  ElementSet out = x;
  for (std::size_t i : m.full() - x) {
    if (m.rank(x.with(i)) == r) out = out.with(i);
  }
  return out;
}

int dual_rank(const RankOracle& m, ElementSet x) {
  if (!m.ground().contains_set(x)) {
    throw DomainError("subset leaves the ground set");
  }
  return static_cast<int>(x.size()) + m.rank(x.complement_in(m.full())) -
         m.full_rank();
}

ElementSet dual_closure(const RankOracle& m, ElementSet x) {
  const int r = dual_rank(m, x);
  ElementSet out = x;
  for (std::size_t i : m.full() - x) {
    if (dual_rank(m, x.with(i)) == r) out = out.with(i);
  }
  return out;
}

TransversalMatroid restriction(const TransversalMatroid& m, ElementSet x) {
  const GroundSet& g = m.ground();
  if (!g.contains_set(x)) {
    throw DomainError("restriction set leaves the ground set");
  }
  std::vector<std::size_t> positions(x.begin(), x.end());
  std::vector<ElementSet> sets;
  sets.reserve(m.presentation().size());
  for (ElementSet a : m.presentation().sets()) {
    ElementSet local;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (a.contains(positions[j])) local = local.with(j);
    }
    sets.push_back(local);
  }
  return TransversalMatroid(Presentation(g.subset(x), std::move(sets)));
}

bool matroids_equal(const RankOracle& a, const RankOracle& b,
                    std::size_t max_ground) {
  const GroundSet& ga = a.ground();
  const GroundSet& gb = b.ground();
  if (ga.size() != gb.size()) {
    throw PreconditionError("ground sets differ in size (" +
                            std::to_string(ga.size()) + " vs " +
                            std::to_string(gb.size()) + ")");
  }
  require_ground_bound(ga, max_ground, "matroids_equal");
  // position in a -> position in b
  std::vector<std::size_t> to_b(ga.size());
  for (std::size_t i = 0; i < ga.size(); ++i) {
    auto j = gb.find(ga.label(i));
    if (!j) {
      throw PreconditionError("label '" + ga.label(i) +
                              "' is missing from the second ground set");
    }
    to_b[i] = *j;
  }
  if (a.full_rank() != b.full_rank()) return false;
  const std::uint64_t count = std::uint64_t{1} << ga.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet x = ElementSet::from_bits(bits);
    ElementSet y;
    for (std::size_t i : x) y = y.with(to_b[i]);
    if (a.rank(x) != b.rank(y)) return false;
  }
  return true;
}

LoopsAndColoops loops_and_coloops(const RankOracle& m) {
  LoopsAndColoops out;
  const ElementSet full = m.full();
  for (std::size_t i : full) {
    if (m.rank(ElementSet::singleton(i)) == 0) out.loops = out.loops.with(i);
    if (m.rank(full.without(i)) == m.full_rank() - 1) {
      out.coloops = out.coloops.with(i);
    }
  }
  return out;
}

namespace {

// Advances `pick` (strictly increasing indices below n) to the next
// combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t k = pick.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (pick[pos] < n - k + pos) {
      ++pick[pos];
      for (std::size_t q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::size_t> rank_sized_subfamily(const TransversalMatroid& m,
                                              std::size_t max_ground) {
  const Presentation& pres = m.presentation();
  const auto r = static_cast<std::size_t>(m.full_rank());
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  if (pres.size() == r) return pick;

  require_ground_bound(m.ground(), max_ground, "normalize_presentation");
  const RankTable target(m, max_ground);
  const std::uint64_t count = std::uint64_t{1} << m.ground().size();
  do {
    const Presentation candidate = pres.select(pick);
    if (max_partial_transversal(candidate, candidate.ground().full()) != r) {
      continue;
    }
    bool same = true;
    for (std::uint64_t bits = 0; same && bits < count; ++bits) {
      const ElementSet x = ElementSet::from_bits(bits);
      same = static_cast<int>(max_partial_transversal(candidate, x)) ==
             target(x);
    }
    if (same) return pick;
  } while (next_combination(pick, pres.size()));

  // Any basis's matched sets present M, so the search cannot come up empty.
  throw VerificationError("no rank-sized subfamily presents the matroid");
}

TransversalMatroid normalize_presentation(const TransversalMatroid& m,
                                          std::size_t max_ground) {
  const auto pick = rank_sized_subfamily(m, max_ground);
  if (pick.size() == m.presentation().size()) return m;
  return TransversalMatroid(m.presentation().select(pick));
}

}  // namespace tmat
