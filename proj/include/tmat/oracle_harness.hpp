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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmat/element_set.hpp"
#include "tmat/matroid.hpp"
#include "tmat/matroid_ops.hpp"
#include "tmat/path_circular.hpp"
#include "tmat/presentation.hpp"
#include "tmat/rank_oracle.hpp"

namespace tmat::oracle {

// SplitMix64. next(): state += 0x9E3779B97F4A7C15; z = state;
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
// z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // next() % n; n > 0.
  std::uint64_t uniform(std::uint64_t n);
  // (next() >> 11) * 2^-53, in [0, 1).
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

// Seed of case `index` of suite `suite`: with mix(x) the first output of
// SplitMix64(x), mix(mix(mix(seed) + suite * 0xD1B54A32D192ED03) + index).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t suite,
                        std::uint64_t index);

// Rank in M[A]* by minimising |Y| - |{i : A_i within Y}| over every Y
// containing X. Requires |A| = r(M[A]).
int dual_rank_min_formula(const Presentation& pres, ElementSet x,
                          std::size_t max_ground = kDefaultMaxGround);

// Independence in M[A]* via the inequalities
// |X n U_J| <= |U_J| - |J| for every J, U_J the union of the sets in J.
// Requires |A| = r(M[A]).
bool dual_independent_hall(const Presentation& pres, ElementSet x,
                           std::size_t max_sets = kDefaultMaxGround);

// True iff F is the union of some subfamily of A (the empty family gives
// the empty set).
bool cyclic_flat_union_check(const Presentation& pres, ElementSet f,
                             std::size_t max_sets = kDefaultMaxGround);

struct ExhaustiveResult {
  bool transversal = false;
  std::optional<Presentation> presentation;
};

// Searches every multiset of r subsets of E, as nondecreasing sequences of
// bit patterns in lexicographic order, for one presenting m. Loops of m
// are excluded from every candidate set, and a partial family is abandoned
// as soon as it makes some subset independent that is dependent in m.
ExhaustiveResult exhaustive_transversality(const RankOracle& m, int r,
                                           std::size_t max_ground = 6);

struct InstanceSpec {
  std::uint64_t seed = 0;
  std::size_t n_elements = 5;  // at most 7; labels a, b, c, ...
  std::size_t n_sets = 3;      // at most 5
  double density = 0.5;        // probability of each (set, element) incidence
};

struct RandomInstance {
  Presentation presentation;
  bool has_loops = false;
  bool has_coloops = false;
};

// Incidences drawn set by set, element by element.
RandomInstance random_presentation(const InstanceSpec& spec);

struct PathCircularLimits {
  std::size_t max_vertices = 7;
  std::size_t max_paths = 6;
  std::size_t max_path_vertices = 4;
  std::size_t max_extra_edges = 2;
  double null_path_probability = 0.1;
  // Retry until some path has an interior vertex.
  bool require_interior = false;
  // Retry until, after deleting coloops, the vertices that carry paths are
  // exactly r(M(P)) in number (what contract_path needs).
  bool require_rank_sized = false;
  std::size_t retry_cap = 1000;
};

// Random graph (a shuffled backbone path, sometimes closed into a cycle,
// plus a few extra edges) and random self-avoiding walks as paths. Paths
// breaking a path-circular condition are cut at the offending interior
// vertex until the instance validates. Throws PreconditionError when
// retry_cap attempts fail the requirements.
PathCircularInstance random_path_circular(std::uint64_t seed,
                                          const PathCircularLimits& limits = {});

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  // First failing instance, described.
  std::optional<std::string> witness;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
};

// Matching dual rank against the superset-minimum formula, all subsets,
// |E| <= 7, r <= 4.
CheckResult check_dual_rank_formula(const SuiteOptions& options);
// Matching dual independence against the union inequalities, all subsets.
CheckResult check_dual_independence(const SuiteOptions& options);
// Every cyclic flat of M[A]* is a union of sets of A.
CheckResult check_cyclic_flat_unions(const SuiteOptions& options);
// maximal_presentation presents M, and as a multiset equals the alpha
// presentation of M*.
CheckResult check_maximal_presentation(const SuiteOptions& options);
// Presenting-graph verdict vs alpha >= 0 on (M/e)* vs exhaustive search.
// Instances have |E| <= n_elements (at most 7, so |E(M/e)| <= 6). Every
// matroid on five or fewer elements is transversal, so negative verdicts
// need n_elements = 7.
CheckResult check_contraction_verdicts(const SuiteOptions& options,
                                       std::size_t n_elements);
// Whenever M/e is transversal, contract_presentation matches the minor.
CheckResult check_contraction_synthesis(const SuiteOptions& options);
// delete_path and contract_path results validate and present the minors.
CheckResult check_path_circular_minors(const SuiteOptions& options);
// Each non-loop, non-coloop path is a minimal presenting graph for itself.
CheckResult check_path_presenting_graphs(const SuiteOptions& options);

struct SelftestReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

SelftestReport run_selftest(const SuiteOptions& options);

// Generator settings shared by the suites, exposed for tests.
RandomInstance suite_instance(std::uint64_t seed, std::size_t max_elements,
                              std::size_t max_sets);
// Random path-circular instance with per-case limits: 4 to 7 vertices, up
// to 6 paths of up to 4 vertices, some path with an interior vertex, and
// contractible by contract_path.
PathCircularInstance suite_path_instance(std::uint64_t seed);

struct VerdictCase {
  TransversalMatroid m;
  std::size_t pivot = 0;
};
// Instances on n_elements elements built so that both verdicts occur. One
// case in five is a plain random instance with a random pivot; the rest are
// evenly split between (a) the pivot joined to each block of a random
// three-way split of the other elements, lightly perturbed, and (b) 3 or 4
// sets of 2 or 3 random other elements, each holding the pivot with
// probability 0.85.
VerdictCase suite_verdict_case(std::uint64_t seed, std::size_t n_elements);

}  // namespace tmat::oracle
