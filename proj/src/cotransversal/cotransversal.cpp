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

#include "tmat/cotransversal.hpp"

#include <algorithm>
#include <string>

#include "tmat/errors.hpp"

namespace tmat {

namespace {

bool is_cyclic_flat(const RankTable& ranks, ElementSet f) {
  if (!ranks.is_flat(f)) return false;
  const int r = ranks(f);
  for (std::size_t x : f) {
    if (ranks(f.without(x)) != r) return false;
  }
  return true;
}

std::vector<ElementSet> cyclic_flats(const RankTable& ranks) {
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << ranks.ground_size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet f = ElementSet::from_bits(bits);
    if (is_cyclic_flat(ranks, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), flat_order_less);
  return out;
}

// Flats in (size, bits) order, so every proper cyclic subflat precedes F.
AlphaTable alpha_table(const RankTable& ranks) {
  std::vector<AlphaTable::Entry> entries;
  for (ElementSet f : cyclic_flats(ranks)) {
    int value = static_cast<int>(f.size()) - ranks(f);
    for (const auto& e : entries) {
      if (e.flat.is_proper_subset_of(f)) value -= e.alpha;
    }
    entries.push_back({f, value});
  }
  return AlphaTable(std::move(entries));
}

int alpha_from(const AlphaTable& memo, ElementSet x, int rank_x) {
  int value = static_cast<int>(x.size()) - rank_x;
  for (const auto& e : memo.entries()) {
    if (e.flat.is_proper_subset_of(x)) value -= e.alpha;
  }
  return value;
}

CotransversalVerdict is_cotransversal(const RankTable& ranks,
                                      const AlphaTable& memo) {
  CotransversalVerdict out;
  const std::uint64_t count = std::uint64_t{1} << ranks.ground_size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet x = ElementSet::from_bits(bits);
    const int a = alpha_from(memo, x, ranks(x));
    if (a >= 0) continue;
    if (!out.witness || flat_order_less(x, *out.witness)) {
      out.cotransversal = false;
      out.witness = x;
      out.witness_alpha = a;
    }
  }
  return out;
}

}  // namespace

bool is_cyclic_flat(const RankOracle& m, ElementSet f) {
  if (closure(m, f) != f) return false;
  const int r = m.rank(f);
  for (std::size_t x : f) {
    if (m.rank(f.without(x)) != r) return false;
  }
  return true;
}

std::vector<ElementSet> cyclic_flats(const RankOracle& m,
                                     std::size_t max_ground) {
  return cyclic_flats(RankTable(m, max_ground));
}

std::vector<ElementSet> cyclic_flats_from_unions(
    const RankOracle& m, const Presentation& dual_presentation,
    std::size_t max_ground) {
  require_ground_bound(m.ground(), max_ground, "cyclic_flats_from_unions");
  if (!(dual_presentation.ground() == m.ground())) {
    throw PreconditionError(
        "presentation and matroid are over different ground sets");
  }
  const std::size_t r = dual_presentation.size();
  if (r >= 32) {
    throw SizeBoundError("cyclic_flats_from_unions: too many sets");
  }
  std::vector<ElementSet> out;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << r); ++j) {
    ElementSet u;
    for (std::size_t i = 0; i < r; ++i) {
      if ((j >> i) & 1U) u |= dual_presentation[i];
    }
    if (is_cyclic_flat(m, u)) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), flat_order_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> AlphaTable::find(ElementSet flat) const {
  for (const auto& e : entries_) {
    if (e.flat == flat) return e.alpha;
  }
  return std::nullopt;
}

AlphaTable alpha_table(const RankOracle& m, std::size_t max_ground) {
  return alpha_table(RankTable(m, max_ground));
}

int alpha(const RankOracle& m, ElementSet x, const AlphaTable& memo) {
  return alpha_from(memo, x, m.rank(x));
}

int alpha(const RankOracle& m, ElementSet x, std::size_t max_ground) {
  return alpha(m, x, alpha_table(m, max_ground));
}

CotransversalVerdict is_cotransversal(const RankOracle& m,
                                      std::size_t max_ground) {
  const RankTable ranks(m, max_ground);
  return is_cotransversal(ranks, alpha_table(ranks));
}

Presentation alpha_presentation(const RankOracle& m, std::size_t max_ground) {
  const RankTable ranks(m, max_ground);
  const AlphaTable memo = alpha_table(ranks);
  const auto verdict = is_cotransversal(ranks, memo);
  if (!verdict.cotransversal) {
    throw PreconditionError("matroid is not co-transversal: alpha(" +
                                m.ground().format(*verdict.witness) +
                                ") = " + std::to_string(verdict.witness_alpha),
                            verdict.witness);
  }
  std::vector<ElementSet> sets;
  for (const auto& e : memo.entries()) {
    for (int k = 0; k < e.alpha; ++k) sets.push_back(e.flat);
  }
  const int dual_full_rank =
      static_cast<int>(m.size()) - m.full_rank();
  if (static_cast<int>(sets.size()) != dual_full_rank) {
    throw VerificationError("alpha multiplicities sum to " +
                            std::to_string(sets.size()) + ", expected r(M*) = " +
                            std::to_string(dual_full_rank));
  }
  return Presentation(m.ground(), std::move(sets));
}

Presentation maximal_presentation(const TransversalMatroid& m) {
  const Presentation& pres = m.presentation();
  if (static_cast<int>(pres.size()) != m.full_rank()) {
    throw PreconditionError("maximal_presentation needs |A| = r(M); got " +
                            std::to_string(pres.size()) + " sets for rank " +
                            std::to_string(m.full_rank()) +
                            " (normalize first)");
  }
  const RankOracle oracle(m);
  std::vector<ElementSet> sets;
  sets.reserve(pres.size());
  for (ElementSet a : pres.sets()) sets.push_back(dual_closure(oracle, a));
  return Presentation(m.ground(), std::move(sets));
}

Presentation exchange_set(const TransversalMatroid& m, std::size_t i,
                          ElementSet replacement, std::size_t max_ground) {
  const Presentation& pres = m.presentation();
  const GroundSet& g = m.ground();
  if (i >= pres.size()) {
    throw PreconditionError("set index " + std::to_string(i) +
                            " out of range");
  }
  if (!g.contains_set(replacement)) {
    throw DomainError("replacement set leaves the ground set");
  }
  if (static_cast<int>(pres.size()) != m.full_rank()) {
    throw PreconditionError("exchange_set needs |A| = r(M)");
  }
  require_ground_bound(g, max_ground, "exchange_set");

  const RankOracle oracle(m);
  const RankTable dual_ranks(dual(oracle), max_ground);
  const ElementSet a_i = pres[i];
  if (dual_ranks.closure(replacement) != dual_ranks.closure(a_i)) {
    throw PreconditionError("coclosure of " + g.format(replacement) +
                                " differs from coclosure of A_" +
                                std::to_string(i) + " = " + g.format(a_i),
                            replacement);
  }

  // Every superset B of the replacement: enumerate subsets of the rest.
  const ElementSet rest = g.full() - replacement;
  const std::uint64_t rest_bits = rest.bits();
  std::uint64_t sub = 0;
  do {
    const ElementSet b = replacement | ElementSet::from_bits(sub);
    if (!a_i.is_subset_of(b)) {
      const int within = static_cast<int>(pres.sets_within(b).size());
      if (!(dual_ranks(b) < static_cast<int>(b.size()) - within)) {
        throw PreconditionError(
            "exchange rejected: r*(" + g.format(b) + ") = " +
                std::to_string(dual_ranks(b)) + " is not below |B| - |A(B)| = " +
                std::to_string(static_cast<int>(b.size()) - within),
            b);
      }
    }
    sub = (sub - rest_bits) & rest_bits;
  } while (sub != 0);

  std::vector<ElementSet> sets(pres.sets().begin(), pres.sets().end());
  sets[i] = replacement;
  Presentation out(g, std::move(sets));
  if (!matroids_equal(oracle, TransversalMatroid(out), max_ground)) {
    throw VerificationError("exchanged presentation presents a different "
                            "matroid");
  }
  return out;
}

}  // namespace tmat
