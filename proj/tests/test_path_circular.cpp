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

#include "tmat/contraction.hpp"
#include "tmat/errors.hpp"
#include "tmat/matroid_ops.hpp"
#include "tmat/path_circular.hpp"

using namespace tmat;

namespace {

using Names = std::vector<std::string>;

SimpleGraph line_abc() {
  return SimpleGraph::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

SimpleGraph triangle() {
  return SimpleGraph::from_names({"a", "b", "c"},
                                 {{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

VertexPath path(const SimpleGraph& g, std::initializer_list<const char*> vs) {
  VertexPath p;
  for (const char* v : vs) p.vertices.push_back(g.index_of(v));
  return p;
}

std::vector<std::string> names_of(const PathCircularInstance& inst,
                                  std::size_t p) {
  std::vector<std::string> out;
  for (std::size_t v : inst.paths()[p].vertices) {
    out.push_back(inst.graph().name(v));
  }
  return out;
}

bool is_free(const RankOracle& m) { return m.full_rank() == static_cast<int>(m.size()); }

}  // namespace

TEST_CASE("simple graphs") {
  const SimpleGraph g = triangle();
  CHECK(g.degree(0) == 2);
  CHECK(g.adjacent(0, 2));
  CHECK_THROWS_AS(SimpleGraph::from_names({"a"}, {{"a", "z"}}), DomainError);
  CHECK_THROWS_AS(SimpleGraph::from_names({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph::from_names({"a"}, {{"a", "a"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      SimpleGraph::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
      std::invalid_argument);
}

TEST_CASE("validate") {
  const SimpleGraph g = line_abc();
  CHECK(validate(bicircular(g)).valid);

  const PathCircularInstance bad(g, {path(g, {"a", "b", "c"}), path(g, {"b"})});
  const Validation v = validate(bad);
  CHECK_FALSE(v.valid);
  REQUIRE_FALSE(v.violations.empty());
  CHECK(v.violations.front().condition == PathCondition::kEndVertex);
  CHECK(v.violations.front().path == 0);
  CHECK(v.violations.front().other_path == std::optional<std::size_t>{1});

  CHECK(validate(PathCircularInstance(
                     g, {path(g, {"a", "b", "c"}), path(g, {"a", "b"})}))
            .valid);

  const PathCircularInstance gap(g, {path(g, {"a", "c"})});
  CHECK(validate(gap).violations.front().condition == PathCondition::kNotAdjacent);
  const PathCircularInstance twice(g, {path(g, {"a", "b", "a"})});
  CHECK(validate(twice).violations.front().condition ==
        PathCondition::kRepeatedVertex);

  // b has degree 3 here, so it cannot be interior.
  const SimpleGraph star = SimpleGraph::from_names(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
  const PathCircularInstance hub(star, {path(star, {"a", "b", "c"})});
  CHECK(validate(hub).violations.front().condition ==
        PathCondition::kInteriorDegree);
  CHECK_THROWS_AS(matroid_of(hub), PreconditionError);
}

TEST_CASE("matroid_of") {
  CHECK(is_free(matroid_of(bicircular(triangle()))));

  const SimpleGraph g = line_abc();
  const PathCircularInstance with_null(g, {path(g, {"a", "b"}), VertexPath{}});
  CHECK(loops_and_coloops(matroid_of(with_null)).loops.bits() == 0b10);

  const SimpleGraph one = SimpleGraph::from_names({"a"}, {});
  const TransversalMatroid u12 =
      matroid_of(PathCircularInstance(one, {path(one, {"a"}), path(one, {"a"})}));
  CHECK(u12.full_rank() == 1);
  CHECK(u12.rank(ElementSet::singleton(0)) == 1);
}

TEST_CASE("delete_path") {
  const PathCircularInstance k3 = bicircular(triangle());
  const PathCircularInstance d = delete_path(k3, "p0");
  CHECK(d.path_count() == 2);
  CHECK(validate(d).valid);
  CHECK(is_free(matroid_of(d)));
  CHECK(matroid_of(d).full_rank() == 2);
  CHECK(matroids_equal(matroid_of(d),
                       MinorMatroid::deletion(matroid_of(k3), "p0")));

  const SimpleGraph g = line_abc();
  const PathCircularInstance with_null(g, {path(g, {"a", "b"}), VertexPath{}});
  CHECK(delete_path(with_null, "p1").path_count() == 1);

  const PathCircularInstance only(g, {path(g, {"a"}), path(g, {"b", "c"})});
  const PathCircularInstance left = delete_path(only, "p0");
  CHECK(validate(left).valid);
  CHECK(matroid_of(left).presentation()[g.index_of("a")].empty());

  CHECK_THROWS_AS(delete_path(only, "zz"), DomainError);
}

TEST_CASE("contract_path on a three-vertex line") {
  const SimpleGraph g = line_abc();
  const PathCircularInstance inst(
      g,
      {path(g, {"a", "b", "c"}), path(g, {"a"}), path(g, {"c"}),
       path(g, {"a", "b"})},
      {"p", "q1", "q2", "q3"});
  const PathCircularInstance c = contract_path(inst, "p");
  CHECK(c.graph().names()[0] == "a~b");
  CHECK(c.graph().names()[1] == "b~c");
  CHECK(c.graph().edges().size() == 1);
  CHECK(names_of(c, 0) == Names{"a~b"});
  CHECK(names_of(c, 1) == Names{"b~c"});
  CHECK(names_of(c, 2) == Names{"a~b", "b~c"});
  CHECK(matroids_equal(matroid_of(c),
                       MinorMatroid::contraction(matroid_of(inst), "p")));
}

TEST_CASE("contracting a null path is deleting it") {
  const SimpleGraph g = line_abc();
  const PathCircularInstance inst(g, {path(g, {"a", "b"}), VertexPath{}});
  const PathCircularInstance c = contract_path(inst, "p1");
  const PathCircularInstance d = delete_path(inst, "p1");
  CHECK(c.paths().size() == d.paths().size());
  CHECK(c.paths()[0] == d.paths()[0]);
}

TEST_CASE("contract_path keeps coloops on fresh vertices") {
  // c is the only path on vertex d, so it is a coloop.
  const SimpleGraph g = SimpleGraph::from_names(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  const PathCircularInstance inst(
      g, {path(g, {"a", "b", "c"}), path(g, {"a", "b"}), path(g, {"b", "c"}),
          path(g, {"b", "c"}), path(g, {"d"})},
      {"p", "q", "r", "s", "c"});
  const auto lc = loops_and_coloops(matroid_of(inst));
  REQUIRE(lc.coloops.contains(4));
  REQUIRE_FALSE(lc.coloops.contains(0));
  const PathCircularInstance out = contract_path(inst, "p");
  CHECK(validate(out).valid);
  CHECK(names_of(out, 3) == Names{"c'"});
  CHECK(matroids_equal(matroid_of(out),
                       MinorMatroid::contraction(matroid_of(inst), "p")));
}

TEST_CASE("contract_path when another path wraps around the cycle") {
  // 4-cycle a-c-b-d. q holds both ends of p = (b,d,a,c) through the edge
  // b-c, so it must cover every new vertex.
  const SimpleGraph g = SimpleGraph::from_names(
      {"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  const PathCircularInstance inst(
      g,
      {path(g, {"a", "c"}), path(g, {"a", "c", "b"}),
       path(g, {"b", "d", "a", "c"}), path(g, {"a", "c"}), path(g, {"b", "d"})},
      {"r", "q", "p", "s", "t"});
  REQUIRE(validate(inst).valid);
  const PathCircularInstance out = contract_path(inst, "p");
  CHECK(validate(out).valid);
  CHECK(out.paths()[1].size() == 3);
  CHECK(matroids_equal(matroid_of(out),
                       MinorMatroid::contraction(matroid_of(inst), "p")));

  // Same cycle with a two-vertex path across the closing edge b-d: the
  // ends of the new chain become adjacent.
  const SimpleGraph h = SimpleGraph::from_names(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  const PathCircularInstance wrap(
      h,
      {path(h, {"a", "b"}), path(h, {"b", "a", "c", "d"}), path(h, {"b", "d"}),
       path(h, {"b", "d"}), path(h, {"b", "a", "c"}), path(h, {"d"})});
  REQUIRE(validate(wrap).valid);
  const PathCircularInstance closed = contract_path(wrap, "p1");
  CHECK(closed.graph().adjacent(closed.graph().index_of("b~a"),
                                closed.graph().index_of("c~d")));
  CHECK(matroids_equal(matroid_of(closed),
                       MinorMatroid::contraction(matroid_of(wrap), "p1")));
}

TEST_CASE("two copies of an edge are coloops, so contraction deletes") {
  const SimpleGraph g = SimpleGraph::from_names({"a", "b"}, {{"a", "b"}});
  const PathCircularInstance inst(g, {path(g, {"a", "b"}), path(g, {"a", "b"})});
  CHECK(loops_and_coloops(matroid_of(inst)).coloops.bits() == 0b11);
  const PathCircularInstance c = contract_path(inst, "p0");
  CHECK(c.path_count() == 1);
  CHECK(matroids_equal(matroid_of(c),
                       MinorMatroid::contraction(matroid_of(inst), "p0")));
}

TEST_CASE("each path is a minimal presenting graph for itself") {
  const SimpleGraph g = line_abc();
  const PathCircularInstance inst(
      g, {path(g, {"a", "b", "c"}), path(g, {"a"}), path(g, {"c"}),
          path(g, {"a", "b"})});
  const PresentingGraph pg = path_presenting_graph(inst, "p0");
  CHECK(pg.is_tree());
  CHECK(pg.edges().size() == 2);
  const PresentingContext ctx(matroid_of(inst), 0);
  CHECK(ctx.is_minimal(pg));
}

TEST_CASE("bicircular") {
  const PathCircularInstance k3 = bicircular(triangle());
  CHECK(k3.path_count() == 3);
  for (std::size_t p = 0; p < 3; ++p) {
    CHECK(matroid_of(k3).presentation().sets_containing(p).size() <= 2);
  }
  const SimpleGraph edge = SimpleGraph::from_names({"a", "b"}, {{"a", "b"}});
  CHECK(matroid_of(bicircular(edge)).full_rank() == 1);
  const SimpleGraph two = SimpleGraph::from_names(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(is_free(matroid_of(bicircular(two))));
}

TEST_CASE("multipath") {
  const std::vector<CyclicInterval> singles{{0, 0}, {1, 1}, {2, 2}};
  CHECK(validate(multipath(3, singles)).valid);

  const std::vector<CyclicInterval> arcs{{0, 2}, {2, 4}, {4, 1}};
  const PathCircularInstance five = multipath(5, arcs);
  CHECK(validate(five).valid);
  CHECK(five.paths()[2].size() == 3);

  const std::vector<CyclicInterval> nested{{0, 3}, {1, 2}};
  CHECK_THROWS_AS(multipath(6, nested), PreconditionError);
  const std::vector<CyclicInterval> outside{{0, 7}};
  CHECK_THROWS_AS(multipath(6, outside), DomainError);
  const std::vector<CyclicInterval> whole{{0, 5}};
  CHECK_THROWS_AS(multipath(6, whole), PreconditionError);
}

TEST_CASE("add_coloop") {
  const PathCircularInstance one = add_coloop(PathCircularInstance{});
  CHECK(one.graph().vertex_count() == 1);
  CHECK(one.path_count() == 1);
  CHECK(matroid_of(one).full_rank() == 1);

  const PathCircularInstance k3 = add_coloop(bicircular(triangle()));
  CHECK(matroid_of(k3).full_rank() == 4);
  CHECK(loops_and_coloops(matroid_of(k3)).coloops.contains(3));
}
