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

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "tmat/errors.hpp"
#include "tmat/matching.hpp"
#include "tmat/matroid.hpp"
#include "tmat/oracle_harness.hpp"

namespace tmat::oracle {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t n) { return next() % n; }

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t suite,
                        std::uint64_t index) {
  auto mix = [](std::uint64_t x) { return SplitMix64(x).next(); };
  return mix(mix(mix(seed) + suite * 0xD1B54A32D192ED03ULL) + index);
}

namespace {

void require_rank_sized(const Presentation& pres, const char* op) {
  if (!has_transversal(pres)) {
    throw PreconditionError(std::string(op) +
                            " needs a presentation with |A| = r(M[A])");
  }
}

void require_set_bound(const Presentation& pres, std::size_t max_sets,
                       const char* op) {
  if (pres.size() > max_sets || pres.size() >= 32) {
    throw SizeBoundError(std::string(op) + ": " + std::to_string(pres.size()) +
                         " sets exceed the bound");
  }
}

ElementSet union_of_mask(const Presentation& pres, std::uint64_t j) {
  ElementSet u;
  for (std::size_t i = 0; i < pres.size(); ++i) {
    if ((j >> i) & 1U) u |= pres[i];
  }
  return u;
}

}  // namespace

int dual_rank_min_formula(const Presentation& pres, ElementSet x,
                          std::size_t max_ground) {
  require_ground_bound(pres.ground(), max_ground, "dual_rank_min_formula");
  if (!pres.ground().contains_set(x)) {
    throw DomainError("subset leaves the ground set");
  }
  require_rank_sized(pres, "dual_rank_min_formula");
  const ElementSet rest = pres.ground().full() - x;
  const std::uint64_t rest_bits = rest.bits();
  int best = static_cast<int>(pres.ground().size());
  std::uint64_t sub = 0;
  do {
    const ElementSet y = x | ElementSet::from_bits(sub);
    int inside = 0;
    for (ElementSet a : pres.sets()) {
      if (a.is_subset_of(y)) ++inside;
    }
    best = std::min(best, static_cast<int>(y.size()) - inside);
    sub = (sub - rest_bits) & rest_bits;
  } while (sub != 0);
  return best;
}

bool dual_independent_hall(const Presentation& pres, ElementSet x,
                           std::size_t max_sets) {
  require_set_bound(pres, max_sets, "dual_independent_hall");
  if (!pres.ground().contains_set(x)) {
    throw DomainError("subset leaves the ground set");
  }
  require_rank_sized(pres, "dual_independent_hall");
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << pres.size()); ++j) {
    const ElementSet u = union_of_mask(pres, j);
    const int lhs = static_cast<int>((x & u).size());
    const int rhs = static_cast<int>(u.size()) - std::popcount(j);
    if (lhs > rhs) return false;
  }
  return true;
}

bool cyclic_flat_union_check(const Presentation& pres, ElementSet f,
                             std::size_t max_sets) {
  require_set_bound(pres, max_sets, "cyclic_flat_union_check");
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << pres.size()); ++j) {
    if (union_of_mask(pres, j) == f) return true;
  }
  return false;
}

namespace {

class PresentationSearch {
 public:
  PresentationSearch(const RankOracle& m, int r, std::size_t max_ground)
      : m_(m), target_(m, max_ground), r_(r) {
    const ElementSet loops = loops_and_coloops(m).loops;
    const ElementSet usable = m.full() - loops;
    // Every subset of the usable elements is a candidate, in bit order.
    const std::uint64_t usable_bits = usable.bits();
    std::uint64_t sub = 0;
    do {
      candidates_.push_back(ElementSet::from_bits(sub));
      sub = (sub - usable_bits) & usable_bits;
    } while (sub != 0);
    std::sort(candidates_.begin(), candidates_.end());
  }

  std::optional<Presentation> run() {
    if (r_ < 0) return std::nullopt;
    chosen_.clear();
    if (search(0)) return Presentation(m_.ground(), chosen_);
    return std::nullopt;
  }

 private:
  // Compares M[chosen] with m on every subset: 0 = equal, 1 = chosen never
  // exceeds m (can still grow), -1 = chosen exceeds m somewhere (prune).
  int compare() const {
    const Presentation partial(m_.ground(), chosen_);
    bool equal = true;
    const std::uint64_t count = std::uint64_t{1} << m_.size();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const ElementSet x = ElementSet::from_bits(bits);
      const int have =
          static_cast<int>(max_partial_transversal(partial, x));
      const int want = target_(x);
      if (have > want) return -1;
      if (have != want) equal = false;
    }
    return equal ? 0 : 1;
  }

  bool search(std::size_t from) {
    if (static_cast<int>(chosen_.size()) == r_) return compare() == 0;
    for (std::size_t c = from; c < candidates_.size(); ++c) {
      chosen_.push_back(candidates_[c]);
      if (compare() >= 0 && search(c)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  RankOracle m_;
  RankTable target_;
  int r_;
  std::vector<ElementSet> candidates_;
  std::vector<ElementSet> chosen_;
};

}  // namespace

ExhaustiveResult exhaustive_transversality(const RankOracle& m, int r,
                                           std::size_t max_ground) {
  require_ground_bound(m.ground(), max_ground, "exhaustive_transversality");
  ExhaustiveResult out;
  out.presentation = PresentationSearch(m, r, max_ground).run();
  out.transversal = out.presentation.has_value();
  return out;
}

namespace {

std::string element_label(std::size_t i) {
  return std::string(1, static_cast<char>('a' + i));
}

}  // namespace

RandomInstance random_presentation(const InstanceSpec& spec) {
  if (spec.n_elements > 7 || spec.n_sets > 5) {
    throw SizeBoundError("random_presentation: at most 7 elements and 5 sets");
  }
  SplitMix64 rng(spec.seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < spec.n_elements; ++i) {
    labels.push_back(element_label(i));
  }
  std::vector<ElementSet> sets(spec.n_sets);
  for (auto& s : sets) {
    for (std::size_t e = 0; e < spec.n_elements; ++e) {
      if (rng.bernoulli(spec.density)) s = s.with(e);
    }
  }
  RandomInstance out;
  out.presentation = Presentation(GroundSet(std::move(labels)), std::move(sets));
  const auto lc = loops_and_coloops(TransversalMatroid(out.presentation));
  out.has_loops = !lc.loops.empty();
  out.has_coloops = !lc.coloops.empty();
  return out;
}

namespace {

std::string vertex_name(std::size_t i) {
  if (i < 26) return element_label(i);
  return "v" + std::to_string(i);
}

SimpleGraph random_graph(SplitMix64& rng, const PathCircularLimits& limits) {
  const std::size_t n =
      limits.max_vertices <= 1 ? limits.max_vertices
                               : 2 + rng.uniform(limits.max_vertices - 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(vertex_name(i));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform(i)]);
  }
  std::vector<SimpleGraph::Edge> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    const SimpleGraph::Edge e{std::min(a, b), std::max(a, b)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
      edges.push_back(e);
    }
  };
  for (std::size_t i = 0; i + 1 < n; ++i) add(order[i], order[i + 1]);
  if (n >= 3 && rng.bernoulli(0.5)) add(order[n - 1], order[0]);
  if (n >= 2) {
    const std::uint64_t extra = rng.uniform(limits.max_extra_edges + 1);
    for (std::uint64_t k = 0; k < extra; ++k) {
      add(rng.uniform(n), rng.uniform(n));
    }
  }
  return SimpleGraph(std::move(names), std::move(edges));
}

VertexPath random_walk(SplitMix64& rng, const SimpleGraph& g,
                       const PathCircularLimits& limits) {
  VertexPath path;
  if (g.vertex_count() == 0 || limits.max_path_vertices == 0 ||
      rng.bernoulli(limits.null_path_probability)) {
    return path;
  }
  const std::size_t length = 1 + rng.uniform(limits.max_path_vertices);
  path.vertices.push_back(rng.uniform(g.vertex_count()));
  while (path.size() < length) {
    std::vector<std::size_t> options;
    for (std::size_t w : g.neighbors(path.back())) {
      if (!path.contains(w)) options.push_back(w);
    }
    if (options.empty()) break;
    path.vertices.push_back(options[rng.uniform(options.size())]);
  }
  return path;
}

// Cuts offending paths at the interior vertex named by the first violation
// until nothing is left to fix. Each cut shortens a path, so this ends.
PathCircularInstance repair(PathCircularInstance instance) {
  for (;;) {
    const Validation v = validate(instance);
    if (v.valid) return instance;
    const PathViolation& bad = v.violations.front();
    std::vector<VertexPath> paths(instance.paths().begin(),
                                  instance.paths().end());
    auto& vs = paths[bad.path].vertices;
    const auto at = std::find(vs.begin(), vs.end(), bad.vertex);
    vs.erase(at + 1, vs.end());
    instance = PathCircularInstance(
        instance.graph(), std::move(paths),
        std::vector<std::string>(instance.labels().begin(),
                                 instance.labels().end()));
  }
}

bool rank_sized(const PathCircularInstance& instance) {
  const TransversalMatroid m = matroid_of(without_coloops(instance));
  int nonempty = 0;
  for (ElementSet s : m.presentation().sets()) {
    if (!s.empty()) ++nonempty;
  }
  return nonempty == m.full_rank();
}

}  // namespace

PathCircularInstance random_path_circular(std::uint64_t seed,
                                          const PathCircularLimits& limits) {
  SplitMix64 rng(seed);
  for (std::size_t attempt = 0; attempt < limits.retry_cap; ++attempt) {
    const SimpleGraph g = random_graph(rng, limits);
    const std::size_t count =
        limits.max_paths == 0 ? 0 : 1 + rng.uniform(limits.max_paths);
    std::vector<VertexPath> paths;
    for (std::size_t i = 0; i < count; ++i) {
      paths.push_back(random_walk(rng, g, limits));
    }
    PathCircularInstance instance = repair(PathCircularInstance(g, paths));
    if (limits.require_interior &&
        std::none_of(instance.paths().begin(), instance.paths().end(),
                     [](const VertexPath& p) { return p.size() >= 3; })) {
      continue;
    }
    if (limits.require_rank_sized && !rank_sized(instance)) continue;
    return instance;
  }
  throw PreconditionError("random_path_circular: no instance met the limits "
                          "within " + std::to_string(limits.retry_cap) +
                          " attempts");
}

}  // namespace tmat::oracle
