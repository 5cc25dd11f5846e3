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

#include "tmat/contraction.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tmat/errors.hpp"
#include "tmat/rank_oracle.hpp"

namespace tmat {

PresentingGraph::PresentingGraph(std::size_t pivot,
                                 std::vector<std::size_t> vertices,
                                 std::vector<GraphEdge> edges)
    : pivot_(pivot), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw std::invalid_argument("presenting graph repeats a vertex");
  }
  for (auto& edge : edges_) {
    if (edge.a == edge.b) {
      throw std::invalid_argument("presenting graph has a self-loop");
    }
    edge = GraphEdge::make(edge.a, edge.b);
    if (!std::binary_search(vertices_.begin(), vertices_.end(), edge.a) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), edge.b)) {
      throw std::invalid_argument("presenting graph edge leaves its vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("presenting graph repeats an edge");
  }
}

bool PresentingGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            GraphEdge::make(u, v));
}

bool PresentingGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](std::size_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices_.begin(), vertices_.end(), v) -
        vertices_.begin());
  };
  std::size_t components = vertices_.size();
  for (const auto& edge : edges_) {
    const std::size_t x = find(pos(edge.a));
    const std::size_t y = find(pos(edge.b));
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

bool PresentingGraph::is_tree() const {
  return !vertices_.empty() && edges_.size() + 1 == vertices_.size() &&
         is_connected();
}

PresentingGraph PresentingGraph::without_edge(GraphEdge edge) const {
  edge = GraphEdge::make(edge.a, edge.b);
  PresentingGraph out = *this;
  auto it = std::lower_bound(out.edges_.begin(), out.edges_.end(), edge);
  if (it != out.edges_.end() && *it == edge) out.edges_.erase(it);
  return out;
}

PresentingContext::PresentingContext(const TransversalMatroid& m,
                                     std::size_t pivot)
    : matroid_(m), pivot_(pivot) {
  if (pivot >= m.ground().size()) {
    throw DomainError("pivot element outside the ground set");
  }
  const Presentation& pres = m.presentation();
  indices_ = pres.sets_containing(pivot);
  const std::size_t k = indices_.size();
  if (k > ElementSet::kMaxElements) {
    throw SizeBoundError("more than 64 sets contain the pivot");
  }
  const RankOracle oracle(m);
  support_.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const ElementSet span =
          dual_closure(oracle, pres[indices_[a]] | pres[indices_[b]]);
      std::uint64_t mask = 0;
      for (std::size_t u = 0; u < k; ++u) {
        if (pres[indices_[u]].is_subset_of(span)) {
          mask |= std::uint64_t{1} << u;
        }
      }
      support_[a * k + b] = mask;
      support_[b * k + a] = mask;
    }
  }
}

std::size_t PresentingContext::local(std::size_t set_index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), set_index);
  if (it == indices_.end() || *it != set_index) {
    throw PreconditionError("set " + std::to_string(set_index) +
                            " does not contain the pivot");
  }
  return static_cast<std::size_t>(it - indices_.begin());
}

std::vector<std::size_t> PresentingContext::induced_support(
    std::size_t i, std::size_t j) const {
  if (i == j) {
    throw PreconditionError("induced_support needs two distinct indices");
  }
  const std::size_t k = indices_.size();
  const std::uint64_t mask = support_[local(i) * k + local(j)];
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < k; ++u) {
    if ((mask >> u) & 1U) out.push_back(indices_[u]);
  }
  return out;
}

bool PresentingContext::presenting_masks(
    std::span<const std::uint64_t> adjacency) const {
  const std::size_t k = indices_.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const std::uint64_t support = support_[a * k + b];
      std::uint64_t reached = std::uint64_t{1} << a;
      std::uint64_t grown = reached;
      do {
        reached = grown;
        for (std::uint64_t rest = reached; rest != 0; rest &= rest - 1) {
          grown |= adjacency[static_cast<std::size_t>(std::countr_zero(rest))] &
                   support;
        }
      } while (grown != reached);
      if (reached != support) return false;
    }
  }
  return true;
}

bool PresentingContext::is_presenting(const PresentingGraph& g) const {
  if (!std::equal(g.vertices().begin(), g.vertices().end(), indices_.begin(),
                  indices_.end())) {
    throw PreconditionError(
        "graph vertices are not the indices of the sets containing the pivot");
  }
  std::vector<std::uint64_t> adjacency(indices_.size(), 0);
  for (const auto& edge : g.edges()) {
    const std::size_t a = local(edge.a);
    const std::size_t b = local(edge.b);
    adjacency[a] |= std::uint64_t{1} << b;
    adjacency[b] |= std::uint64_t{1} << a;
  }
  return presenting_masks(adjacency);
}

bool PresentingContext::is_minimal(const PresentingGraph& g) const {
  if (!is_presenting(g)) return false;
  for (const auto& edge : g.edges()) {
    if (is_presenting(g.without_edge(edge))) return false;
  }
  return true;
}

PresentingGraph PresentingContext::complete_graph() const {
  std::vector<GraphEdge> edges;
  for (std::size_t a = 0; a < indices_.size(); ++a) {
    for (std::size_t b = a + 1; b < indices_.size(); ++b) {
      edges.push_back({indices_[a], indices_[b]});
    }
  }
  return PresentingGraph(pivot_, indices_, std::move(edges));
}

PresentingGraph PresentingContext::minimal_graph(
    std::span<const GraphEdge> order) const {
  PresentingGraph current = complete_graph();
  if (order.size() != current.edges().size()) {
    throw PreconditionError("deletion order must list every edge once");
  }
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (const auto& edge : order) {
      if (!current.has_edge(edge.a, edge.b)) continue;
      PresentingGraph candidate = current.without_edge(edge);
      if (is_presenting(candidate)) {
        current = std::move(candidate);
        deleted = true;
        break;
      }
    }
  }
  return current;
}

PresentingGraph PresentingContext::minimal_graph() const {
  const PresentingGraph complete = complete_graph();
  return minimal_graph(complete.edges());
}

std::vector<std::size_t> pivot_indices(const TransversalMatroid& m,
                                       std::string_view e) {
  return m.presentation().sets_containing(m.ground().index_of(e));
}

std::vector<std::size_t> induced_support(const TransversalMatroid& m,
                                         std::string_view e, std::size_t i,
                                         std::size_t j) {
  return PresentingContext(m, m.ground().index_of(e)).induced_support(i, j);
}

bool is_presenting(const TransversalMatroid& m, std::string_view e,
                   const PresentingGraph& g) {
  return PresentingContext(m, m.ground().index_of(e)).is_presenting(g);
}

PresentingGraph minimal_presenting_graph(const TransversalMatroid& m,
                                         std::string_view e) {
  return PresentingContext(m, m.ground().index_of(e)).minimal_graph();
}

ContractionCheck is_contraction_transversal(const TransversalMatroid& m,
                                            std::string_view e,
                                            std::size_t max_ground) {
  const std::size_t pivot = m.ground().index_of(e);
  ContractionCheck out;
  const ElementSet full = m.ground().full();
  if (m.rank(ElementSet::singleton(pivot)) == 0) {
    out.kind = PivotKind::kLoop;
  } else if (m.rank(full.without(pivot)) == m.full_rank() - 1) {
    out.kind = PivotKind::kColoop;
  }
  if (out.kind != PivotKind::kOrdinary) {
    out.transversal = true;
    out.normalized = m;
    out.kept_sets.resize(m.presentation().size());
    std::iota(out.kept_sets.begin(), out.kept_sets.end(), std::size_t{0});
    return out;
  }
  out.kept_sets = rank_sized_subfamily(m, max_ground);
  out.normalized = out.kept_sets.size() == m.presentation().size()
                       ? m
                       : TransversalMatroid(m.presentation().select(out.kept_sets));
  out.graph = PresentingContext(out.normalized, pivot).minimal_graph();
  out.transversal = out.graph.is_tree();
  return out;
}

namespace {

// Re-indexes a set over E onto E - {removed}.
ElementSet drop_position(ElementSet s, std::size_t removed) {
  const std::uint64_t low_mask = (std::uint64_t{1} << removed) - 1;
  const std::uint64_t bits = s.bits();
  return ElementSet::from_bits((bits & low_mask) |
                               ((bits >> 1) & ~low_mask));
}

std::string describe_edges(const PresentingGraph& g) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& edge : g.edges()) {
    if (!first) os << ',';
    os << '{' << edge.a << ',' << edge.b << '}';
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

ContractedPresentation contract_presentation(const TransversalMatroid& m,
                                             std::string_view e,
                                             std::size_t max_ground) {
  require_ground_bound(m.ground(), max_ground, "contract_presentation");
  const std::size_t pivot = m.ground().index_of(e);
  ContractedPresentation out;
  out.check = is_contraction_transversal(m, e, max_ground);
  out.kind = out.check.kind;

  if (out.kind != PivotKind::kOrdinary) {
    out.presentation =
        restriction(m, m.ground().full().without(pivot)).presentation();
    out.set_order = out.check.kept_sets;
  } else {
    if (!out.check.transversal) {
      throw PreconditionError(
          "M/" + std::string(e) +
          " is not transversal: the minimal presenting graph " +
          describe_edges(out.check.graph) + " has a cycle");
    }
    const Presentation& pres = out.check.normalized.presentation();
    const GroundSet contracted_ground =
        m.ground().subset(m.ground().full().without(pivot));
    std::vector<ElementSet> sets;
    for (const auto& edge : out.check.graph.edges()) {
      sets.push_back(drop_position((pres[edge.a] | pres[edge.b]).without(pivot),
                                   pivot));
    }
    out.set_order = pres.sets_containing(pivot);
    for (std::size_t j = 0; j < pres.size(); ++j) {
      if (pres[j].contains(pivot)) continue;
      out.set_order.push_back(j);
      sets.push_back(drop_position(pres[j], pivot));
    }
    out.presentation = Presentation(contracted_ground, std::move(sets));
  }

  const MinorMatroid minor(m, ElementSet{}, ElementSet::singleton(pivot));
  if (!matroids_equal(minor, TransversalMatroid(out.presentation),
                      max_ground)) {
    throw VerificationError("synthesized presentation of M/" +
                            std::string(e) + " does not match the minor");
  }
  return out;
}

}  // namespace tmat
