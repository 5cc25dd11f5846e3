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

#include <exception>
#include <functional>
#include <sstream>

#include "tmat/contraction.hpp"
#include "tmat/cotransversal.hpp"
#include "tmat/errors.hpp"
#include "tmat/matroid.hpp"
#include "tmat/oracle_harness.hpp"

namespace tmat::oracle {

namespace {

enum Suite : std::uint64_t {
  kDualRank = 1,
  kDualIndependence,
  kCyclicFlats,
  kMaximal,
  kVerdicts,
  kSynthesis,
  kPathMinors,
  kPathGraphs,
  kVerdictsLarge,
};

std::string describe(const Presentation& pres) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pres.size(); ++i) {
    if (i != 0) os << ',';
    os << pres.ground().format(pres[i]);
  }
  os << ')';
  return os.str();
}

std::string describe(const PathCircularInstance& instance) {
  const SimpleGraph& g = instance.graph();
  std::ostringstream os;
  os << "edges {";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    os << (first ? "" : ",") << g.name(a) << '-' << g.name(b);
    first = false;
  }
  os << "} paths {";
  for (std::size_t p = 0; p < instance.path_count(); ++p) {
    os << (p == 0 ? "" : ",") << instance.labels()[p] << "=(";
    const auto& vs = instance.paths()[p].vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      os << (i == 0 ? "" : ",") << g.name(vs[i]);
    }
    os << ')';
  }
  os << '}';
  return os.str();
}

// Runs `body` once per case. The body returns an empty string on success or
// a description of the failure; it may also report that the case does not
// apply by returning std::nullopt, in which case it is not counted.
CheckResult run_cases(
    std::string name, const SuiteOptions& options, Suite suite,
    const std::function<std::optional<std::string>(std::uint64_t)>& body) {
  CheckResult out;
  out.name = std::move(name);
  for (std::size_t i = 0; i < options.cases; ++i) {
    const std::uint64_t seed = case_seed(options.seed, suite, i);
    std::optional<std::string> failure;
    try {
      failure = body(seed);
      if (!failure) continue;
    } catch (const std::exception& ex) {
      failure = std::string("exception: ") + ex.what();
    }
    ++out.instances;
    if (failure->empty()) continue;
    ++out.failures;
    if (!out.witness) {
      out.witness = "case " + std::to_string(i) + ": " + *failure;
    }
  }
  return out;
}

TransversalMatroid rank_sized_instance(std::uint64_t seed,
                                       std::size_t max_elements,
                                       std::size_t max_sets) {
  return normalize_presentation(
      TransversalMatroid(suite_instance(seed, max_elements, max_sets)
                             .presentation));
}

}  // namespace

RandomInstance suite_instance(std::uint64_t seed, std::size_t max_elements,
                              std::size_t max_sets) {
  SplitMix64 rng(seed);
  InstanceSpec spec;
  spec.n_elements = 3 + rng.uniform(max_elements - 2);
  spec.n_sets = 1 + rng.uniform(max_sets);
  spec.density = 0.2 + 0.6 * rng.unit();
  spec.seed = rng.next();
  return random_presentation(spec);
}

PathCircularInstance suite_path_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  PathCircularLimits limits;
  limits.max_vertices = 4 + rng.uniform(4);
  limits.max_paths = 6;
  limits.max_path_vertices = 4;
  limits.max_extra_edges = rng.uniform(3);
  limits.null_path_probability = 0.05;
  limits.require_interior = true;
  limits.require_rank_sized = true;
  return random_path_circular(rng.next(), limits);
}

CheckResult check_dual_rank_formula(const SuiteOptions& options) {
  return run_cases(
      "dual rank = superset-minimum formula", options, kDualRank,
      [](std::uint64_t seed) -> std::optional<std::string> {
        const TransversalMatroid m = rank_sized_instance(seed, 7, 4);
        const RankOracle view(m);
        const Presentation& pres = m.presentation();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << view.size());
             ++bits) {
          const ElementSet x = ElementSet::from_bits(bits);
          const int matched = dual_rank(view, x);
          const int formula = dual_rank_min_formula(pres, x);
          if (matched != formula) {
            return describe(pres) + " X=" + view.ground().format(x) +
                   " matching " + std::to_string(matched) + " formula " +
                   std::to_string(formula);
          }
        }
        return std::string();
      });
}

CheckResult check_dual_independence(const SuiteOptions& options) {
  return run_cases(
      "dual independence = union inequalities", options, kDualIndependence,
      [](std::uint64_t seed) -> std::optional<std::string> {
        const TransversalMatroid m = rank_sized_instance(seed, 7, 4);
        const Presentation& pres = m.presentation();
        const ElementSet full = m.ground().full();
        for (std::uint64_t bits = 0; bits <= full.bits(); ++bits) {
          const ElementSet x = ElementSet::from_bits(bits);
          const bool matched = m.rank(full - x) == m.full_rank();
          if (matched != dual_independent_hall(pres, x)) {
            return describe(pres) + " X=" + m.ground().format(x);
          }
        }
        return std::string();
      });
}

CheckResult check_cyclic_flat_unions(const SuiteOptions& options) {
  return run_cases(
      "dual cyclic flats are unions of sets", options, kCyclicFlats,
      [](std::uint64_t seed) -> std::optional<std::string> {
        const TransversalMatroid m = rank_sized_instance(seed, 7, 4);
        for (ElementSet f : cyclic_flats(dual(m))) {
          if (!cyclic_flat_union_check(m.presentation(), f)) {
            return describe(m.presentation()) + " flat " +
                   m.ground().format(f);
          }
        }
        return std::string();
      });
}

CheckResult check_maximal_presentation(const SuiteOptions& options) {
  return run_cases(
      "maximal presentation = alpha presentation of the dual", options,
      kMaximal, [](std::uint64_t seed) -> std::optional<std::string> {
        const TransversalMatroid m = rank_sized_instance(seed, 7, 4);
        const Presentation maximal = maximal_presentation(m);
        const RankOracle d = dual(m);
        if (!matroids_equal(m, TransversalMatroid(maximal))) {
          return describe(m.presentation()) + " maximal " + describe(maximal) +
                 " presents a different matroid";
        }
        for (ElementSet a : maximal.sets()) {
          if (!is_cyclic_flat(d, a)) {
            return describe(maximal) + " set " + m.ground().format(a) +
                   " is not a cyclic flat of the dual";
          }
        }
        const Presentation by_alpha = alpha_presentation(d);
        if (!same_multiset(maximal, by_alpha)) {
          return "maximal " + describe(maximal) + " vs alpha " +
                 describe(by_alpha);
        }
        return std::string();
      });
}

VerdictCase suite_verdict_case(std::uint64_t seed, std::size_t n_elements) {
  SplitMix64 rng(seed);
  if (rng.uniform(5) == 0) {
    VerdictCase out{TransversalMatroid(
                        suite_instance(rng.next(), n_elements, 4).presentation),
                    0};
    out.pivot = rng.uniform(out.m.ground().size());
    return out;
  }
  const std::size_t n = n_elements;
  const std::size_t pivot = rng.uniform(n);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != pivot) others.push_back(i);
  }
  auto shuffle = [&rng, &others] {
    for (std::size_t i = others.size(); i > 1; --i) {
      std::swap(others[i - 1], others[rng.uniform(i)]);
    }
  };
  std::vector<ElementSet> sets;
  if (rng.bernoulli(0.5) && others.size() >= 3) {
    // Pivot plus one block of a random 3-way split of the other elements,
    // then perturbed. Unperturbed, contracting the pivot leaves three
    // parallel classes in rank 2, which is not transversal once every class
    // has two elements.
    shuffle();
    const std::size_t m = others.size();
    // Blocks of at least two elements when there is room for them.
    const std::size_t least = m >= 6 ? 2 : 1;
    std::size_t sizes[3] = {least, least, least};
    for (std::size_t extra = m - 3 * least; extra > 0; --extra) {
      ++sizes[rng.uniform(3)];
    }
    const std::size_t cut1 = sizes[0];
    const std::size_t cut2 = sizes[0] + sizes[1];
    const std::size_t cuts[4] = {0, cut1, cut2, m};
    for (int b = 0; b < 3; ++b) {
      ElementSet s = ElementSet::singleton(pivot);
      for (std::size_t i = cuts[b]; i < cuts[b + 1]; ++i) s = s.with(others[i]);
      if (rng.bernoulli(0.25)) s = s.with(others[rng.uniform(m)]);
      sets.push_back(s);
    }
    if (rng.bernoulli(0.25)) {
      shuffle();
      ElementSet s = ElementSet::from_bits(0);
      for (std::size_t i = 0; i < 2; ++i) s = s.with(others[i]);
      if (rng.bernoulli(0.5)) s = s.with(pivot);
      sets.push_back(s);
    }
  } else {
    // Sparse sets, most of them through the pivot.
    sets.resize(3 + rng.uniform(2));
    for (auto& s : sets) {
      shuffle();
      const std::size_t k = 2 + rng.uniform(2);
      for (std::size_t i = 0; i < k && i < others.size(); ++i) {
        s = s.with(others[i]);
      }
      if (rng.bernoulli(0.85)) s = s.with(pivot);
    }
  }
  const Presentation base = random_presentation({0, n, 0, 0.0}).presentation;
  return {TransversalMatroid(Presentation(base.ground(), std::move(sets))),
          pivot};
}

namespace {

CheckResult contraction_verdicts(const SuiteOptions& options,
                                 std::size_t n_elements, Suite suite) {
  return run_cases(
      "contraction verdict: graph = alpha = exhaustive, |E| = " +
          std::to_string(n_elements),
      options, suite,
      [n_elements](std::uint64_t seed) -> std::optional<std::string> {
        const VerdictCase c = suite_verdict_case(seed, n_elements);
        const std::string& e = c.m.ground().label(c.pivot);
        const bool by_graph = is_contraction_transversal(c.m, e).transversal;
        const MinorMatroid minor(c.m, ElementSet{},
                                 ElementSet::singleton(c.pivot));
        const bool by_alpha = is_cotransversal(dual(minor)).cotransversal;
        const RankOracle view(minor);
        const bool by_search =
            exhaustive_transversality(view, view.full_rank()).transversal;
        if (by_graph == by_alpha && by_alpha == by_search) {
          return std::string();
        }
        return describe(c.m.presentation()) + " e=" + e + " graph " +
               (by_graph ? "T" : "F") + " alpha " + (by_alpha ? "T" : "F") +
               " search " + (by_search ? "T" : "F");
      });
}

}  // namespace

CheckResult check_contraction_verdicts(const SuiteOptions& options,
                                       std::size_t n_elements) {
  return contraction_verdicts(options, n_elements,
                              n_elements <= 6 ? kVerdicts : kVerdictsLarge);
}

CheckResult check_contraction_synthesis(const SuiteOptions& options) {
  return run_cases(
      "synthesized contraction matches the minor", options, kSynthesis,
      [](std::uint64_t seed) -> std::optional<std::string> {
        const VerdictCase c = suite_verdict_case(seed, 7);
        const std::string& e = c.m.ground().label(c.pivot);
        if (!is_contraction_transversal(c.m, e).transversal) {
          return std::nullopt;
        }
        const ContractedPresentation out = contract_presentation(c.m, e);
        const MinorMatroid minor(c.m, ElementSet{},
                                 ElementSet::singleton(c.pivot));
        if (!matroids_equal(minor, TransversalMatroid(out.presentation))) {
          return describe(c.m.presentation()) + " e=" + e + " gave " +
                 describe(out.presentation);
        }
        return std::string();
      });
}

CheckResult check_path_circular_minors(const SuiteOptions& options) {
  return run_cases(
      "path deletion and contraction stay path-circular", options,
      kPathMinors, [](std::uint64_t seed) -> std::optional<std::string> {
        const PathCircularInstance instance =
            suite_path_instance(seed);
        const TransversalMatroid m = matroid_of(instance);
        for (std::size_t p = 0; p < instance.path_count(); ++p) {
          const std::string& label = instance.labels()[p];
          const ElementSet just_p = ElementSet::singleton(p);
          const PathCircularInstance deleted = delete_path(instance, label);
          if (!validate(deleted).valid ||
              !matroids_equal(MinorMatroid(m, just_p, ElementSet{}),
                              matroid_of(deleted))) {
            return describe(instance) + " deleting " + label;
          }
          const PathCircularInstance contracted =
              contract_path(instance, label, {.verify = false});
          if (!validate(contracted).valid ||
              !matroids_equal(MinorMatroid(m, ElementSet{}, just_p),
                              matroid_of(contracted))) {
            return describe(instance) + " contracting " + label;
          }
        }
        return std::string();
      });
}

CheckResult check_path_presenting_graphs(const SuiteOptions& options) {
  return run_cases(
      "each path is a minimal presenting graph", options, kPathGraphs,
      [](std::uint64_t seed) -> std::optional<std::string> {
        const PathCircularInstance reduced =
            without_coloops(suite_path_instance(seed));
        const TransversalMatroid m = matroid_of(reduced);
        for (std::size_t p = 0; p < reduced.path_count(); ++p) {
          if (reduced.paths()[p].empty()) continue;
          const std::string& label = reduced.labels()[p];
          const PresentingContext context(m, p);
          const PresentingGraph g = path_presenting_graph(reduced, label);
          if (!context.is_minimal(g)) {
            return describe(reduced) + " path " + label;
          }
        }
        return std::string();
      });
}

bool SelftestReport::passed() const {
  for (const auto& c : checks) {
    if (c.failures != 0) return false;
  }
  return true;
}

SelftestReport run_selftest(const SuiteOptions& options) {
  SelftestReport report;
  report.seed = options.seed;
  report.cases = options.cases;
  report.checks.push_back(check_dual_rank_formula(options));
  report.checks.push_back(check_dual_independence(options));
  report.checks.push_back(check_cyclic_flat_unions(options));
  report.checks.push_back(check_maximal_presentation(options));
  report.checks.push_back(check_contraction_verdicts(options, 6));
  report.checks.push_back(check_contraction_verdicts(options, 7));
  report.checks.push_back(check_contraction_synthesis(options));
  report.checks.push_back(check_path_circular_minors(options));
  report.checks.push_back(check_path_presenting_graphs(options));
  return report;
}

}  // namespace tmat::oracle
