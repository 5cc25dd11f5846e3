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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tmat/element_set.hpp"
#include "tmat/matroid.hpp"
#include "tmat/matroid_ops.hpp"
#include "tmat/presentation.hpp"

namespace tmat {

// Undirected edge between two set indices, stored with a < b.
struct GraphEdge {
  std::size_t a = 0;
  std::size_t b = 0;

  static GraphEdge make(std::size_t u, std::size_t v) {
    return u < v ? GraphEdge{u, v} : GraphEdge{v, u};
  }
  auto operator<=>(const GraphEdge&) const = default;
};

// Simple graph whose vertices are the indices {i : e in A_i} of a
// presentation; the presenting map is the identity on indices.
class PresentingGraph {
 public:
  PresentingGraph() = default;
  // Sorts vertices and edges. Throws std::invalid_argument on a self-loop,
  // a repeated edge or vertex, or an edge leaving the vertex set.
  PresentingGraph(std::size_t pivot, std::vector<std::size_t> vertices,
                  std::vector<GraphEdge> edges);

  std::size_t pivot() const { return pivot_; }
  std::span<const std::size_t> vertices() const { return vertices_; }
  std::span<const GraphEdge> edges() const { return edges_; }
  bool has_edge(std::size_t u, std::size_t v) const;

  bool is_connected() const;
  // Connected with |edges| = |vertices| - 1. The empty graph is not a tree.
  bool is_tree() const;

  PresentingGraph without_edge(GraphEdge edge) const;

  bool operator==(const PresentingGraph&) const = default;

 private:
  std::size_t pivot_ = 0;
  std::vector<std::size_t> vertices_;
  std::vector<GraphEdge> edges_;
};

// Everything about (M, e) that does not depend on the candidate graph: the
// pivot indices and, for each pair of them, which pivot sets lie inside
// cl*(A_i u A_j). Computed once and shared read-only.
class PresentingContext {
 public:
  PresentingContext(const TransversalMatroid& m, std::size_t pivot);

  const TransversalMatroid& matroid() const { return matroid_; }
  std::size_t pivot() const { return pivot_; }
  std::span<const std::size_t> pivot_indices() const { return indices_; }

  // {u in pivot indices : A_u within cl*(A_i u A_j)}; i != j, both pivot
  // indices, else PreconditionError.
  std::vector<std::size_t> induced_support(std::size_t i, std::size_t j) const;

  // For every pair of vertices, the subgraph induced by their support is
  // connected. Throws PreconditionError if the vertex set is wrong.
  bool is_presenting(const PresentingGraph& g) const;
  // Presenting, and no single edge deletion stays presenting.
  bool is_minimal(const PresentingGraph& g) const;

  PresentingGraph complete_graph() const;

  // Starting from the complete graph, repeatedly deletes the first edge in
  // `order` whose deletion keeps the graph presenting, rescanning from the
  // start after each deletion. `order` must list every edge of the
  // complete graph exactly once.
  PresentingGraph minimal_graph(std::span<const GraphEdge> order) const;
  // Same, with edges in lexicographic order.
  PresentingGraph minimal_graph() const;

 private:
  std::size_t local(std::size_t set_index) const;
  bool presenting_masks(std::span<const std::uint64_t> adjacency) const;

  TransversalMatroid matroid_;
  std::size_t pivot_;
  std::vector<std::size_t> indices_;
  // support_[a * k + b]: local positions inside the support of pair (a, b).
  std::vector<std::uint64_t> support_;
};

std::vector<std::size_t> pivot_indices(const TransversalMatroid& m,
                                       std::string_view e);
std::vector<std::size_t> induced_support(const TransversalMatroid& m,
                                         std::string_view e, std::size_t i,
                                         std::size_t j);
bool is_presenting(const TransversalMatroid& m, std::string_view e,
                   const PresentingGraph& g);
// The empty graph is returned when e is a loop.
PresentingGraph minimal_presenting_graph(const TransversalMatroid& m,
                                         std::string_view e);

enum class PivotKind { kOrdinary, kLoop, kColoop };

struct ContractionCheck {
  bool transversal = false;
  PivotKind kind = PivotKind::kOrdinary;
  // Rank-sized presentation the graph refers to, and the index in the input
  // presentation of each of its sets.
  TransversalMatroid normalized;
  std::vector<std::size_t> kept_sets;
  // Lexicographic minimal presenting graph; empty for loops and coloops.
  PresentingGraph graph;
};

// Decides whether M/e is transversal: it is iff a minimal presenting graph
// of a rank-sized presentation is a tree. The presentation is normalized
// first when |A| != r(M). Loops and coloops short-circuit to true, since
// then M/e = M\e.
ContractionCheck is_contraction_transversal(
    const TransversalMatroid& m, std::string_view e,
    std::size_t max_ground = kDefaultMaxGround);

struct ContractedPresentation {
  // Presents M/e over E - e in declaration order.
  Presentation presentation;
  PivotKind kind = PivotKind::kOrdinary;
  ContractionCheck check;
  // Order in which the normalized sets were taken: those containing e
  // first, then the rest.
  std::vector<std::size_t> set_order;
};

// For tree edges {u_1,v_1}, ..., {u_{k-1},v_{k-1}} (lexicographic order),
// returns (A_u1 u A_v1 - e, ..., A_{k+1}, ..., A_r), verified equal to M/e
// on every subset before returning. Throws PreconditionError if M/e is not
// transversal and VerificationError if the check fails.
ContractedPresentation contract_presentation(
    const TransversalMatroid& m, std::string_view e,
    std::size_t max_ground = kDefaultMaxGround);

}  // namespace tmat
