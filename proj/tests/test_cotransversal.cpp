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

#include "doctest.h"

#include "fixtures.hpp"
#include "tmat/cotransversal.hpp"
#include "tmat/errors.hpp"
#include "tmat/matroid_ops.hpp"
#include "tmat/oracle_harness.hpp"

using namespace tmat;
using namespace tmat::test;

namespace {

RankOracle u24() { return TransversalMatroid(pres("abcd", {"abcd", "abcd"})); }

RankOracle free3() { return TransversalMatroid(pres("abc", {"a", "b", "c"})); }

}  // namespace

TEST_CASE("is_cyclic_flat") {
  const TransversalMatroid a = three_pairs();
  CHECK(is_cyclic_flat(a, ElementSet{}));
  CHECK(is_cyclic_flat(a, set_of(a.ground(), "uv")));
  CHECK_FALSE(is_cyclic_flat(a, set_of(a.ground(), "x")));
}

TEST_CASE("cyclic flats of small matroids") {
  const RankOracle u = u24();
  CHECK(cyclic_flats(u) == std::vector<ElementSet>{ElementSet{}, u.full()});

  const RankOracle k = k4();
  const auto flats = cyclic_flats(k);
  REQUIRE(flats.size() == 6);
  CHECK(flats.front().empty());
  CHECK(flats.back() == k.full());
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(flats[i].size() == 3);
    CHECK(k.rank(flats[i]) == 2);
  }
  CHECK(cyclic_flats(free3()) == std::vector<ElementSet>{ElementSet{}});
}

TEST_CASE("alpha values") {
  const RankOracle k = k4();
  const AlphaTable table = alpha_table(k);
  CHECK(alpha(k, ElementSet{}, table) == 0);
  CHECK(alpha(k, ElementSet::from_bits(0b001011), table) == 1);  // ab ac bc
  CHECK(alpha(k, k.full(), table) == -1);
  CHECK(alpha(u24(), u24().full()) == 2);
}

TEST_CASE("co-transversality verdicts") {
  CHECK(is_cotransversal(u24()).cotransversal);
  const auto k = is_cotransversal(k4());
  CHECK_FALSE(k.cotransversal);
  REQUIRE(k.witness.has_value());
  CHECK(*k.witness == k4().full());
  CHECK(k.witness_alpha == -1);
  CHECK(is_cotransversal(free3()).cotransversal);
}

TEST_CASE("alpha presentations") {
  const Presentation p = alpha_presentation(u24());
  REQUIRE(p.size() == 2);
  CHECK(p[0] == u24().full());
  CHECK(p[1] == u24().full());

  // Free matroid: its dual is all loops, presented by no sets.
  CHECK(alpha_presentation(free3()).empty());

  try {
    alpha_presentation(k4());
    FAIL("K4 has a negative alpha");
  } catch (const PreconditionError& ex) {
    REQUIRE(ex.witness().has_value());
    CHECK(*ex.witness() == k4().full());
  }
}

TEST_CASE("maximal presentations") {
  const TransversalMatroid c = four_copies();
  const Presentation max_c = maximal_presentation(c);
  CHECK(max_c == c.presentation());

  const TransversalMatroid b = overlapping_chain();
  const Presentation max_b = maximal_presentation(b);
  CHECK(matroids_equal(TransversalMatroid(max_b), b));
  CHECK(maximal_presentation(TransversalMatroid(max_b)) == max_b);
  CHECK(same_multiset(max_b, alpha_presentation(dual(RankOracle(b)))));
  for (ElementSet s : max_b.sets()) {
    CHECK(is_cyclic_flat(dual(RankOracle(b)), s));
  }
}

TEST_CASE("exchange_set") {
  const TransversalMatroid b = overlapping_chain();
  CHECK(exchange_set(b, 1, b.presentation()[1]) == b.presentation());

  const ElementSet co = dual_closure(b, b.presentation()[0]);
  const Presentation grown = exchange_set(b, 0, co);
  CHECK(grown[0] == co);
  CHECK(matroids_equal(TransversalMatroid(grown), b));

  // In U_{1,2} = M[({a,b})], shrinking the set to {a} would make b a loop.
  const TransversalMatroid u12(pres("ab", {"ab"}));
  try {
    exchange_set(u12, 0, set_of(u12.ground(), "a"));
    FAIL("shrinking to {a} must be rejected");
  } catch (const PreconditionError& ex) {
    REQUIRE(ex.witness().has_value());
    CHECK(*ex.witness() == set_of(u12.ground(), "a"));
  }

  CHECK_THROWS_AS(exchange_set(TransversalMatroid(pres("ab", {"ab", "ab", "ab"})),
                               0, ElementSet{}),
                  PreconditionError);
}

TEST_CASE("cyclic flats of a transversal dual are unions of presentation sets") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto inst = oracle::suite_instance(oracle::case_seed(3, 100, i), 7, 4);
    const TransversalMatroid m = normalize_presentation(
        TransversalMatroid(inst.presentation));
    const RankOracle d = dual(RankOracle(m));
    const auto all = cyclic_flats(d);
    for (ElementSet f : all) {
      REQUIRE(oracle::cyclic_flat_union_check(m.presentation(), f));
    }
    CHECK(cyclic_flats_from_unions(d, m.presentation()) == all);
  }
}

TEST_CASE("alpha is permutation invariant") {
  // Relabelling K4's edges permutes its alpha table and nothing else.
  const RankOracle k = k4();
  const RankOracle shuffled =
      cycle_matroid(4, {{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}, {0, 1}});
  std::vector<int> a;
  std::vector<int> b;
  for (const auto& e : alpha_table(k).entries()) a.push_back(e.alpha);
  for (const auto& e : alpha_table(shuffled).entries()) b.push_back(e.alpha);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}
