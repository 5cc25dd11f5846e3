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
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmat/contraction.hpp"
#include "tmat/matroid.hpp"
#include "tmat/matroid_ops.hpp"

namespace tmat {

// Simple undirected graph on named vertices.
class SimpleGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SimpleGraph() = default;
  // Throws std::invalid_argument on empty or duplicate names, self-loops,
  // repeated edges, or edge endpoints out of range.
  SimpleGraph(std::vector<std::string> names, std::vector<Edge> edges);
  static SimpleGraph from_names(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  std::span<const std::string> names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  // Throws DomainError for an unknown name.
  std::size_t index_of(std::string_view name) const;

  // Sorted, each edge with first < second.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const std::size_t> neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Sequence of vertex indices of a host graph. May be empty (a null path).
struct VertexPath {
  std::vector<std::size_t> vertices;

  bool empty() const { return vertices.empty(); }
  std::size_t size() const { return vertices.size(); }
  std::size_t front() const { return vertices.front(); }
  std::size_t back() const { return vertices.back(); }
  bool contains(std::size_t v) const;

  bool operator==(const VertexPath&) const = default;
};

// A graph plus a labelled collection of paths (duplicates allowed). The
// labels name the elements of the path-circular matroid. Construction only
// checks that indices are in range; validate() checks the path-circular
// conditions.
class PathCircularInstance {
 public:
  PathCircularInstance() = default;
  // Empty `labels` means "p0", "p1", .... Each path is stored with the
  // endpoint whose name is lexicographically smaller first.
  PathCircularInstance(SimpleGraph graph, std::vector<VertexPath> paths,
                       std::vector<std::string> labels = {});

  const SimpleGraph& graph() const { return graph_; }
  std::span<const VertexPath> paths() const { return paths_; }
  std::span<const std::string> labels() const { return labels_; }
  std::size_t path_count() const { return paths_.size(); }
  // Throws DomainError for an unknown label.
  std::size_t path_index(std::string_view label) const;

 private:
  SimpleGraph graph_;
  std::vector<VertexPath> paths_;
  std::vector<std::string> labels_;
};

enum class PathCondition {
  kRepeatedVertex,  // a vertex occurs twice on the path
  kNotAdjacent,     // consecutive vertices are not adjacent
  kInteriorDegree,  // (i): an interior vertex does not have degree 2
  kEndVertex,       // (ii): a path through an interior vertex misses both ends
};

struct PathViolation {
  std::size_t path = 0;
  std::size_t vertex = 0;
  PathCondition condition = PathCondition::kRepeatedVertex;
  // For kEndVertex, the path that meets the interior vertex.
  std::optional<std::size_t> other_path;
};

struct Validation {
  bool valid = true;
  std::vector<PathViolation> violations;
};

Validation validate(const PathCircularInstance& instance);
std::string describe(const PathCircularInstance& instance,
                     const PathViolation& violation);

// M(P): ground set = path labels; one set N(v) = {paths through v} per
// vertex, in vertex order. Throws PreconditionError on an invalid instance.
TransversalMatroid matroid_of(const PathCircularInstance& instance);

// Removes a path; the graph is unchanged.
PathCircularInstance delete_path(const PathCircularInstance& instance,
                                 std::string_view label);

// Removes every path that is a coloop of M(P); the graph is unchanged.
PathCircularInstance without_coloops(const PathCircularInstance& instance);

struct ContractPathOptions {
  // Compare M(P') against M(P)/p on every subset before returning.
  bool verify = true;
  std::size_t max_ground = kDefaultMaxGround;
};

// Instance (G', P') with M(P') = M(P)/p. Each edge {u_i, u_{i+1}} of p is
// subdivided by a vertex named "u_i~u_{i+1}", the new vertices are chained,
// the first and last inherit the outside neighbours of u_1 and u_k (and an
// edge u_1u_k becomes an edge between them), and the vertices of p are
// deleted. Another path q is sent to its vertices off p together with every
// u_i~u_{i+1} such that q holds u_i or u_{i+1}, which is what the
// contraction's presentation N(u_i) u N(u_{i+1}) - p demands. When q meets
// p in a prefix or suffix this is the walk trading u_i for the new vertex
// after it (paths through u_1) or before it (paths through u_k only),
// dropping a repeated start; a path holding both ends of p but not its
// middle is reordered along G'. Null paths and coloops of M(P) contract as
// deletions; other coloops are set aside first and restored as
// single-vertex paths on fresh isolated vertices.
PathCircularInstance contract_path(const PathCircularInstance& instance,
                                   std::string_view label,
                                   const ContractPathOptions& options = {});

// One two-vertex path per edge of `graph`, in edge order.
PathCircularInstance bicircular(const SimpleGraph& graph);

// Arc start, start+1, ..., end (mod n) of a cycle.
struct CyclicInterval {
  std::size_t start = 0;
  std::size_t end = 0;
};

// Cycle v0 - v1 - ... - v{n-1} - v0 with one path per interval. Rejects
// intervals covering the whole cycle and any interval contained in another.
PathCircularInstance multipath(std::size_t n,
                               std::span<const CyclicInterval> intervals);

// Adds an isolated vertex and a single-vertex path on it; the new element
// is a coloop. Fresh names are generated when `label` is not given.
PathCircularInstance add_coloop(const PathCircularInstance& instance,
                                std::optional<std::string> label = {});

// The path itself as a graph on the set indices of M(P) that contain it
// (vertex index = set index), with its consecutive pairs as edges.
PresentingGraph path_presenting_graph(const PathCircularInstance& instance,
                                      std::string_view label);

}  // namespace tmat
