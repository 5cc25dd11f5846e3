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

#include "tmat/errors.hpp"
#include "tmat/io.hpp"
#include "tmat/matroid_ops.hpp"

using namespace tmat;

TEST_CASE("presentation JSON round trip") {
  const std::string text =
      R"({"elements": ["e","u","v"], "sets": [["e","u"], ["v"], []]})";
  const Presentation p = io::presentation_from_json(text);
  CHECK(p.size() == 3);
  CHECK(p[2].empty());
  const std::string out = io::presentation_to_json(p);
  CHECK(io::presentation_from_json(out) == p);
  CHECK(out == "{\n  \"elements\": [\"e\",\"u\",\"v\"],\n  \"sets\": [\n"
               "    [\"e\",\"u\"],\n    [\"v\"],\n    []\n  ]\n}\n");
}

TEST_CASE("presentation JSON errors") {
  CHECK_THROWS_AS(io::presentation_from_json("{"), ParseError);
  CHECK_THROWS_AS(io::presentation_from_json(R"({"elements": ["a"]})"),
                  ParseError);
  CHECK_THROWS_AS(
      io::presentation_from_json(R"({"elements": ["a"], "sets": [["b"]]})"),
      ParseError);
  CHECK_THROWS_AS(
      io::presentation_from_json(R"({"elements": ["a","a"], "sets": []})"),
      ParseError);
  CHECK_THROWS_AS(io::presentation_from_json(
                      R"({"elements": ["a"], "sets": [], "extra": 1})"),
                  ParseError);
}

TEST_CASE("instance JSON round trip") {
  const std::string text = R"({
    "vertices": ["a","b","c"],
    "edges": [["a","b"],["b","c"]],
    "paths": [["c","b","a"],["a"],[]],
    "labels": ["p","q","z"]
  })";
  const PathCircularInstance inst = io::instance_from_json(text);
  CHECK(inst.labels()[0] == "p");
  // Stored with the smaller end name first.
  CHECK(inst.graph().name(inst.paths()[0].front()) == "a");
  const std::string out = io::instance_to_json(inst);
  const PathCircularInstance back = io::instance_from_json(out);
  CHECK(io::instance_to_json(back) == out);
  CHECK(matroids_equal(matroid_of(inst), matroid_of(back)));

  CHECK_THROWS_AS(io::instance_from_json(
                      R"({"vertices":["a"],"edges":[],"paths":[["b"]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      io::instance_from_json(
          R"({"vertices":["a"],"edges":[],"paths":[["a"]],"labels":[]})"),
      ParseError);
}

TEST_CASE("graph JSON ignores path keys") {
  const SimpleGraph g = io::graph_from_json(
      R"({"vertices":["a","b"],"edges":[["a","b"]],"paths":[]})");
  CHECK(g.edges().size() == 1);
  CHECK_THROWS_AS(io::graph_from_json(R"({"vertices":["a"],"edges":[["a","b"]]})"),
                  ParseError);
}

TEST_CASE("DOT output") {
  const PathCircularInstance inst = io::instance_from_json(
      R"({"vertices":["a","b"],"edges":[["a","b"]],"paths":[["a","b"],[]]})");
  const std::string dot = io::instance_to_dot(inst);
  CHECK(dot.rfind("graph instance {\n", 0) == 0);
  CHECK(dot.find("\"a\" -- \"b\";") != std::string::npos);
  CHECK(dot.find("p1: (null)") != std::string::npos);
  CHECK(dot == io::instance_to_dot(inst));
}
