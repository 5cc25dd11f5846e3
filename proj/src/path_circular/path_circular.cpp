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

#include "tmat/path_circular.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "tmat/errors.hpp"
#include "tmat/rank_oracle.hpp"

namespace tmat {

SimpleGraph::SimpleGraph(std::vector<std::string> names,
                         std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (names_[v].empty()) {
      throw std::invalid_argument("vertex name must be nonempty");
    }
    if (!index_.emplace(names_[v], v).second) {
      throw std::invalid_argument("duplicate vertex name '" + names_[v] + "'");
    }
  }
  for (auto& [u, v] : edges_) {
    if (u >= names_.size() || v >= names_.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at '" + names_[u] + "'");
    }
    if (v < u) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto repeated = std::adjacent_find(edges_.begin(), edges_.end());
  if (repeated != edges_.end()) {
    throw std::invalid_argument("repeated edge {" + names_[repeated->first] +
                                "," + names_[repeated->second] + "}");
  }
  adjacency_.assign(names_.size(), {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

SimpleGraph SimpleGraph::from_names(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < names.size(); ++v) index.emplace(names[v], v);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw DomainError("edge {" + a + "," + b + "} names an unknown vertex");
    }
    indexed.emplace_back(ia->second, ib->second);
  }
  return SimpleGraph(std::move(names), std::move(indexed));
}

std::optional<std::size_t> SimpleGraph::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimpleGraph::index_of(std::string_view name) const {
  const auto v = find(name);
  if (!v) throw DomainError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool VertexPath::contains(std::size_t v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

PathCircularInstance::PathCircularInstance(SimpleGraph graph,
                                           std::vector<VertexPath> paths,
                                           std::vector<std::string> labels)
    : graph_(std::move(graph)),
      paths_(std::move(paths)),
      labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      labels_.push_back("p" + std::to_string(i));
    }
  }
  if (labels_.size() != paths_.size()) {
    throw std::invalid_argument("one label per path required");
  }
  if (paths_.size() > ElementSet::kMaxElements) {
    throw SizeBoundError("at most 64 paths are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw std::invalid_argument("path label must be nonempty");
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate path label '" + label + "'");
    }
  }
  for (auto& path : paths_) {
    for (std::size_t v : path.vertices) {
      if (v >= graph_.vertex_count()) {
        throw DomainError("path vertex out of range");
      }
    }
    if (path.size() >= 2 &&
        graph_.name(path.back()) < graph_.name(path.front())) {
      std::reverse(path.vertices.begin(), path.vertices.end());
    }
  }
}

std::size_t PathCircularInstance::path_index(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw DomainError("unknown path '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Validation validate(const PathCircularInstance& instance) {
  Validation out;
  const SimpleGraph& g = instance.graph();
  const auto paths = instance.paths();
  auto report = [&](PathViolation v) {
    out.valid = false;
    out.violations.push_back(v);
  };
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto& vs = paths[p].vertices;
    std::vector<std::size_t> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      report({p, *dup, PathCondition::kRepeatedVertex, std::nullopt});
      continue;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      if (!g.adjacent(vs[i], vs[i + 1])) {
        report({p, vs[i], PathCondition::kNotAdjacent, std::nullopt});
      }
    }
  }
  if (!out.valid) return out;

  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto& path = paths[p];
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const std::size_t u = path.vertices[i];
      if (g.degree(u) != 2) {
        report({p, u, PathCondition::kInteriorDegree, std::nullopt});
      }
      for (std::size_t q = 0; q < paths.size(); ++q) {
        const auto& other = paths[q];
        if (!other.contains(u)) continue;
        if (!other.contains(path.front()) && !other.contains(path.back())) {
          report({p, u, PathCondition::kEndVertex, q});
        }
      }
    }
  }
  return out;
}

std::string describe(const PathCircularInstance& instance,
                     const PathViolation& violation) {
  const std::string& path = instance.labels()[violation.path];
  const std::string& vertex = instance.graph().name(violation.vertex);
  switch (violation.condition) {
    case PathCondition::kRepeatedVertex:
      return "path " + path + " repeats vertex " + vertex;
    case PathCondition::kNotAdjacent:
      return "path " + path + " steps from " + vertex +
             " to a non-adjacent vertex";
    case PathCondition::kInteriorDegree:
      return "interior vertex " + vertex + " of path " + path +
             " has degree " +
             std::to_string(instance.graph().degree(violation.vertex)) +
             ", expected 2";
    case PathCondition::kEndVertex:
      return "path " + instance.labels()[*violation.other_path] +
             " passes through interior vertex " + vertex + " of path " +
             path + " without containing an end of it";
  }
  return "unknown violation";
}

namespace {

void require_valid(const PathCircularInstance& instance, const char* op) {
  const Validation v = validate(instance);
  if (!v.valid) {
    throw PreconditionError(std::string(op) + ": " +
                            describe(instance, v.violations.front()));
  }
}

GroundSet ground_of(const PathCircularInstance& instance) {
  return GroundSet(std::vector<std::string>(instance.labels().begin(),
                                            instance.labels().end()));
}

// N(v) for every vertex, without the validity check.
Presentation neighbourhoods(const PathCircularInstance& instance) {
  std::vector<ElementSet> sets(instance.graph().vertex_count());
  const auto paths = instance.paths();
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t v : paths[p].vertices) sets[v] = sets[v].with(p);
  }
  return Presentation(ground_of(instance), std::move(sets));
}

std::string fresh_name(const std::string& base,
                       const std::unordered_set<std::string>& taken) {
  std::string name = base;
  while (taken.count(name) != 0) name += '\'';
  return name;
}

// Appends an isolated vertex named after `label` and a path on it.
void append_coloop(std::vector<std::string>& names,
                   std::vector<SimpleGraph::Edge>& /*edges*/,
                   std::vector<VertexPath>& paths,
                   std::vector<std::string>& labels, const std::string& label,
                   std::unordered_set<std::string>& taken_names) {
  const std::string name = fresh_name(label + "'", taken_names);
  taken_names.insert(name);
  paths.push_back({{names.size()}});
  names.push_back(name);
  labels.push_back(label);
}

PathCircularInstance drop_paths(const PathCircularInstance& instance,
                                ElementSet drop) {
  std::vector<VertexPath> paths;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < instance.path_count(); ++p) {
    if (drop.contains(p)) continue;
    paths.push_back(instance.paths()[p]);
    labels.push_back(instance.labels()[p]);
  }
  return PathCircularInstance(instance.graph(), std::move(paths),
                              std::move(labels));
}

// Graph and rewritten paths after contracting path `pivot` of a valid
// instance whose matroid has no coloops. Paths keep their order; the pivot
// is omitted.
struct Rewritten {
  std::vector<std::string> names;
  std::vector<SimpleGraph::Edge> edges;
  std::vector<VertexPath> paths;
};

template <class Adjacent>
bool walks_target(const std::vector<std::size_t>& walk,
                  std::vector<std::size_t> target, const Adjacent& adjacent) {
  std::vector<std::size_t> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  if (sorted != target) return false;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!adjacent(walk[i], walk[i + 1])) return false;
  }
  return true;
}

// Some ordering of `vertices` that is a path, trying starts and steps in
// increasing index order; empty when there is none.
template <class Adjacent>
std::vector<std::size_t> order_as_path(const std::vector<std::size_t>& vertices,
                                       const Adjacent& adjacent) {
  std::vector<std::size_t> walk;
  std::vector<bool> used(vertices.size(), false);
  auto extend = [&](auto& self) -> bool {
    if (walk.size() == vertices.size()) return true;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (used[i] || (!walk.empty() && !adjacent(walk.back(), vertices[i]))) {
        continue;
      }
      used[i] = true;
      walk.push_back(vertices[i]);
      if (self(self)) return true;
      walk.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (!extend(extend)) walk.clear();
  return walk;
}

Rewritten rewrite_around(const PathCircularInstance& instance,
                         std::size_t pivot) {
  const SimpleGraph& g = instance.graph();
  const VertexPath& p = instance.paths()[pivot];
  const std::size_t k = p.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<std::size_t> position(g.vertex_count(), kNone);
  for (std::size_t i = 0; i < k; ++i) position[p.vertices[i]] = i;

  Rewritten out;
  std::vector<std::size_t> kept(g.vertex_count(), kNone);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (position[v] != kNone) continue;
    kept[v] = out.names.size();
    out.names.push_back(g.name(v));
  }
  std::unordered_set<std::string> taken(g.names().begin(), g.names().end());
  const std::size_t first_new = out.names.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const std::string name =
        g.name(p.vertices[i]) + "~" + g.name(p.vertices[i + 1]);
    if (!taken.insert(name).second) {
      throw PreconditionError("subdivision vertex name '" + name +
                              "' is already in use");
    }
    out.names.push_back(name);
  }
  auto sub = [&](std::size_t i) { return first_new + i; };

  std::set<SimpleGraph::Edge> edges;
  auto add_edge = [&](std::size_t a, std::size_t b) {
    edges.insert(a < b ? SimpleGraph::Edge{a, b} : SimpleGraph::Edge{b, a});
  };
  for (const auto& [a, b] : g.edges()) {
    if (kept[a] != kNone && kept[b] != kNone) add_edge(kept[a], kept[b]);
  }
  for (std::size_t i = 0; i + 2 < k; ++i) add_edge(sub(i), sub(i + 1));
  if (k >= 2) {
    for (std::size_t w : g.neighbors(p.front())) {
      if (kept[w] != kNone) add_edge(sub(0), kept[w]);
    }
    for (std::size_t w : g.neighbors(p.back())) {
      if (kept[w] != kNone) add_edge(sub(k - 2), kept[w]);
    }
  }
  // An edge closing p into a cycle survives between the end new vertices.
  if (k >= 3 && g.adjacent(p.front(), p.back())) add_edge(sub(0), sub(k - 2));
  out.edges.assign(edges.begin(), edges.end());

  std::vector<std::vector<std::size_t>> adj(out.names.size());
  for (const auto& [a, b] : out.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto adjacent = [&](std::size_t a, std::size_t b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };

  for (std::size_t q = 0; q < instance.path_count(); ++q) {
    if (q == pivot) continue;
    const VertexPath& path = instance.paths()[q];
    const bool has_first = path.contains(p.front());
    const bool has_last = path.contains(p.back());

    // The image must carry q on exactly the new vertices whose set is
    // N(u_i) u N(u_{i+1}) - p, i.e. every u_i~u_{i+1} with u_i or u_{i+1}
    // on q, plus q's vertices off p.
    std::vector<std::size_t> target;
    for (std::size_t v : path.vertices) {
      if (position[v] == kNone) target.push_back(kept[v]);
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (path.contains(p.vertices[i]) || path.contains(p.vertices[i + 1])) {
        target.push_back(sub(i));
      }
    }
    std::sort(target.begin(), target.end());

    // Walk q, sending u_i to u_i~u_{i+1} when q holds the start of p and to
    // u_{i-1}~u_i when it holds only the end.
    VertexPath image;
    for (std::size_t v : path.vertices) {
      const std::size_t j = position[v];
      if (j == kNone) {
        image.vertices.push_back(kept[v]);
      } else if (has_first) {
        if (j + 1 < k) {
          image.vertices.push_back(sub(j));
        } else if (k >= 2) {
          image.vertices.push_back(sub(k - 2));
        }
      } else if (has_last) {
        image.vertices.push_back(sub(j - 1));
      } else {
        throw VerificationError("path meets an interior vertex of the "
                                "contracted path but neither end");
      }
    }
    auto& vs = image.vertices;
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() >= 2 && vs.front() == vs.back()) vs.erase(vs.begin());

    // A path holding both ends of p but skipping its middle walks to a
    // vertex sequence that misses part of the target or is not a path.
    // Reorder the target along G' instead.
    if (!walks_target(vs, target, adjacent)) {
      vs = order_as_path(target, adjacent);
      if (vs.empty() && !target.empty()) {
        throw VerificationError("no path of the contracted graph covers the "
                                "image of path " + instance.labels()[q]);
      }
    }
    out.paths.push_back(std::move(image));
  }
  return out;
}

}  // namespace

TransversalMatroid matroid_of(const PathCircularInstance& instance) {
  require_valid(instance, "matroid_of");
  return TransversalMatroid(neighbourhoods(instance));
}

PathCircularInstance delete_path(const PathCircularInstance& instance,
                                 std::string_view label) {
  return drop_paths(instance, ElementSet::singleton(instance.path_index(label)));
}

PathCircularInstance without_coloops(const PathCircularInstance& instance) {
  return drop_paths(instance, loops_and_coloops(matroid_of(instance)).coloops);
}

PathCircularInstance contract_path(const PathCircularInstance& instance,
                                   std::string_view label,
                                   const ContractPathOptions& options) {
  const std::size_t pivot = instance.path_index(label);
  const TransversalMatroid m = matroid_of(instance);
  const ElementSet coloops = loops_and_coloops(m).coloops;

  PathCircularInstance result;
  if (instance.paths()[pivot].empty() || coloops.contains(pivot)) {
    result = delete_path(instance, label);
  } else {
    const PathCircularInstance reduced = drop_paths(instance, coloops);
    const TransversalMatroid reduced_m = matroid_of(reduced);
    int nonempty = 0;
    for (ElementSet s : reduced_m.presentation().sets()) {
      if (!s.empty()) ++nonempty;
    }
    if (nonempty != reduced_m.full_rank()) {
      throw PreconditionError(
          "after removing coloops, " + std::to_string(nonempty) +
          " vertices carry paths but the rank is " +
          std::to_string(reduced_m.full_rank()));
    }
    Rewritten rw = rewrite_around(reduced, reduced.path_index(label));

    // Reassemble in the original path order, restoring coloops.
    std::vector<VertexPath> paths;
    std::vector<std::string> labels;
    std::unordered_set<std::string> taken(rw.names.begin(), rw.names.end());
    std::size_t next_rewritten = 0;
    for (std::size_t q = 0; q < instance.path_count(); ++q) {
      if (q == pivot) continue;
      const std::string& name = instance.labels()[q];
      if (coloops.contains(q)) {
        append_coloop(rw.names, rw.edges, paths, labels, name, taken);
      } else {
        paths.push_back(std::move(rw.paths[next_rewritten++]));
        labels.push_back(name);
      }
    }
    result = PathCircularInstance(
        SimpleGraph(std::move(rw.names), std::move(rw.edges)),
        std::move(paths), std::move(labels));

  }

  const Validation check = validate(result);
  if (!check.valid) {
    throw VerificationError("contracted instance is not path-circular: " +
                            describe(result, check.violations.front()));
  }
  if (options.verify) {
    const MinorMatroid minor(m, ElementSet{}, ElementSet::singleton(pivot));
    if (!matroids_equal(minor, TransversalMatroid(neighbourhoods(result)),
                        options.max_ground)) {
      throw VerificationError("contracted instance does not present M/" +
                              std::string(label));
    }
  }
  return result;
}

PathCircularInstance bicircular(const SimpleGraph& graph) {
  std::vector<VertexPath> paths;
  for (const auto& [u, v] : graph.edges()) paths.push_back({{u, v}});
  return PathCircularInstance(graph, std::move(paths));
}

PathCircularInstance multipath(std::size_t n,
                               std::span<const CyclicInterval> intervals) {
  if (n < 3) throw PreconditionError("multipath needs a cycle of length >= 3");
  if (n > ElementSet::kMaxElements) {
    throw SizeBoundError("multipath cycle longer than 64");
  }
  std::vector<std::string> names;
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  std::vector<VertexPath> paths;
  std::vector<ElementSet> covers;
  for (const auto& arc : intervals) {
    if (arc.start >= n || arc.end >= n) {
      throw DomainError("arc endpoint outside the cycle");
    }
    const std::size_t length = (arc.end + n - arc.start) % n + 1;
    if (length >= n) {
      throw PreconditionError("arc " + std::to_string(arc.start) + ":" +
                              std::to_string(arc.end) +
                              " covers the whole cycle");
    }
    VertexPath path;
    ElementSet cover;
    for (std::size_t i = 0; i < length; ++i) {
      const std::size_t v = (arc.start + i) % n;
      path.vertices.push_back(v);
      cover = cover.with(v);
    }
    paths.push_back(std::move(path));
    covers.push_back(cover);
  }
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j = 0; j < covers.size(); ++j) {
      if (i != j && covers[i].is_subset_of(covers[j])) {
        throw PreconditionError("arc " + std::to_string(i) +
                                " lies inside arc " + std::to_string(j));
      }
    }
  }
  PathCircularInstance out(SimpleGraph(std::move(names), std::move(edges)),
                           std::move(paths));
  require_valid(out, "multipath");
  return out;
}

PathCircularInstance add_coloop(const PathCircularInstance& instance,
                                std::optional<std::string> label) {
  std::unordered_set<std::string> labels_taken(instance.labels().begin(),
                                               instance.labels().end());
  std::string name = label.value_or("");
  if (name.empty()) {
    for (std::size_t i = 0;; ++i) {
      name = "c" + std::to_string(i);
      if (labels_taken.count(name) == 0) break;
    }
  }
  const SimpleGraph& g = instance.graph();
  std::vector<std::string> names(g.names().begin(), g.names().end());
  std::vector<SimpleGraph::Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<VertexPath> paths(instance.paths().begin(),
                                instance.paths().end());
  std::vector<std::string> labels(instance.labels().begin(),
                                  instance.labels().end());
  std::unordered_set<std::string> taken(names.begin(), names.end());
  append_coloop(names, edges, paths, labels, name, taken);
  return PathCircularInstance(SimpleGraph(std::move(names), std::move(edges)),
                              std::move(paths), std::move(labels));
}

PresentingGraph path_presenting_graph(const PathCircularInstance& instance,
                                      std::string_view label) {
  const VertexPath& p = instance.paths()[instance.path_index(label)];
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    edges.push_back(GraphEdge::make(p.vertices[i], p.vertices[i + 1]));
  }
  return PresentingGraph(instance.path_index(label), p.vertices,
                         std::move(edges));
}

}  // namespace tmat
