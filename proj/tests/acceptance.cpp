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

// Runs every acceptance criterion at its time limit and prints one line per
// criterion. Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tmat/contraction.hpp"
#include "tmat/cotransversal.hpp"
#include "tmat/errors.hpp"
#include "tmat/io.hpp"
#include "tmat/matroid_ops.hpp"
#include "tmat/oracle_harness.hpp"
#include "tmat/path_circular.hpp"

#ifndef TMAT_CLI_PATH
#error "TMAT_CLI_PATH must name the tmat executable"
#endif
#ifndef TMAT_DATA_DIR
#error "TMAT_DATA_DIR must name the data directory"
#endif

using namespace tmat;
namespace fs = std::filesystem;

namespace {

// Collects failed expectations for one criterion.
struct Outcome {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Presentation load(const std::string& name) {
  return io::presentation_from_json(
      io::read_file(fs::path(TMAT_DATA_DIR) / name));
}

std::vector<PresentingGraph> subgraphs_of(const PresentingContext& ctx) {
  const PresentingGraph k = ctx.complete_graph();
  const std::vector<std::size_t> vertices(k.vertices().begin(),
                                          k.vertices().end());
  std::vector<PresentingGraph> out;
  const std::size_t m = k.edges().size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) edges.push_back(k.edges()[i]);
    }
    out.emplace_back(ctx.pivot(), vertices, std::move(edges));
  }
  return out;
}

void suite(Outcome& out, const oracle::CheckResult& r, std::size_t want) {
  std::ostringstream os;
  os << r.name << ": " << r.failures << " of " << r.instances << " failed";
  if (r.witness) os << " (" << *r.witness << ")";
  out.expect(r.failures == 0, os.str());
  out.expect(r.instances >= want, r.name + ": only " +
                                      std::to_string(r.instances) +
                                      " applicable instances");
}

void three_pairs_case(Outcome& out) {
  const TransversalMatroid m(load("three_pairs.json"));
  const PresentingGraph g = minimal_presenting_graph(m, "e");
  const PresentingGraph triangle(
      0, {0, 1, 2},
      {GraphEdge::make(0, 1), GraphEdge::make(0, 2), GraphEdge::make(1, 2)});
  out.expect(g == triangle, "minimal presenting graph is not the triangle");
  out.expect(!is_contraction_transversal(m, "e").transversal,
             "verdict should be NOT TRANSVERSAL");
  const RankOracle minor(MinorMatroid::contraction(m, "e"));
  out.expect(minor.size() == 6 && minor.full_rank() == 2,
             "M/e should have 6 elements and rank 2");
  out.expect(!oracle::exhaustive_transversality(minor, 2).transversal,
             "exhaustive search found a presentation of M/e");
  const CotransversalVerdict v = is_cotransversal(dual(minor));
  out.expect(!v.cotransversal && v.witness && v.witness_alpha < 0,
             "alpha criterion found no negative witness");
}

void overlapping_chain_case(Outcome& out) {
  const TransversalMatroid m(load("overlapping_chain.json"));
  const PresentingContext ctx(m, m.ground().index_of("e"));
  const PresentingGraph path(0, {0, 1, 2},
                             {GraphEdge::make(0, 1), GraphEdge::make(1, 2)});
  out.expect(minimal_presenting_graph(m, "e") == path,
             "minimal presenting graph is not {0,1},{1,2}");
  std::size_t minimal = 0;
  bool only_path = true;
  for (const auto& g : subgraphs_of(ctx)) {
    if (ctx.is_minimal(g)) {
      ++minimal;
      only_path = only_path && g == path;
    }
  }
  out.expect(minimal == 1 && only_path,
             "the path is not the unique minimal graph among 8 subgraphs");
  const Presentation c = contract_presentation(m, "e").presentation;
  const GroundSet& g = c.ground();
  out.expect(c.size() == 2 && g.format(c[0]) == "{s,t,u,v,w,x}" &&
                 g.format(c[1]) == "{u,v,w,x,y,z}",
             "contracted presentation differs");
  const MinorMatroid minor = MinorMatroid::contraction(m, "e");
  out.expect(minor.ground().size() == 8,
             "M/e should have 8 elements (256 subsets)");
  out.expect(matroids_equal(TransversalMatroid(c), minor),
             "contracted presentation is not M/e");
}

void four_copies_case(Outcome& out) {
  const TransversalMatroid m(load("four_copies.json"));
  out.expect(is_contraction_transversal(m, "e").transversal,
             "verdict should be TRANSVERSAL");
  const PresentingContext ctx(m, m.ground().index_of("e"));
  std::size_t trees = 0;
  for (const auto& g : subgraphs_of(ctx)) {
    if (!g.is_tree()) continue;
    ++trees;
    out.expect(ctx.is_presenting(g) && ctx.is_minimal(g),
               "a spanning tree of K4 is not minimal presenting");
  }
  out.expect(trees == 16, "expected 16 spanning trees of K4");
  const TransversalMatroid c(contract_presentation(m, "e").presentation);
  out.expect(c.full_rank() == 3, "E should have rank 3");
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const ElementSet x = ElementSet::from_bits(bits);
    if (x.size() == 3) {
      out.expect(c.rank(x) == 3, "a 3-subset has rank below 3");
    }
  }
  out.expect(c.ground().size() == 4, "U_{3,4} needs 4 elements");
}

void cross_oracle(Outcome& out) {
  const oracle::SuiteOptions o{1, 200};
  suite(out, oracle::check_dual_rank_formula(o), 200);
  suite(out, oracle::check_dual_independence(o), 200);
}

void cyclic_flats_suite(Outcome& out) {
  const oracle::SuiteOptions o{1, 100};
  suite(out, oracle::check_cyclic_flat_unions(o), 100);
  suite(out, oracle::check_maximal_presentation(o), 100);
}

void triple_agreement(Outcome& out) {
  const oracle::SuiteOptions o{1, 100};
  suite(out, oracle::check_contraction_verdicts(o, 6), 100);
  // The literal |E| <= 6 run sees only positive verdicts; the |E| = 7 run
  // also exercises the negative side.
  suite(out, oracle::check_contraction_verdicts(o, 7), 100);
}

void synthesis(Outcome& out) {
  suite(out, oracle::check_contraction_synthesis({1, 100}), 1);
  for (const char* name : {"overlapping_chain.json", "four_copies.json"}) {
    const TransversalMatroid m(load(name));
    try {
      const Presentation c = contract_presentation(m, "e").presentation;
      out.expect(matroids_equal(TransversalMatroid(c),
                                MinorMatroid::contraction(m, "e")),
                 std::string(name) + ": synthesis differs from M/e");
    } catch (const std::exception& ex) {
      out.expect(false, std::string(name) + ": " + ex.what());
    }
  }
}

void path_circular_suite(Outcome& out) {
  const oracle::SuiteOptions o{1, 100};
  suite(out, oracle::check_path_circular_minors(o), 100);
  suite(out, oracle::check_path_presenting_graphs(o), 100);
}

void constructors(Outcome& out) {
  const SimpleGraph k3 = SimpleGraph::from_names(
      {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  const PathCircularInstance bi = bicircular(k3);
  const TransversalMatroid m = matroid_of(bi);
  const TransversalMatroid free3(
      Presentation(m.ground(), {ElementSet::singleton(0),
                                ElementSet::singleton(1),
                                ElementSet::singleton(2)}));
  out.expect(matroids_equal(m, free3), "bicircular(K3) is not free");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PathCircularInstance r = oracle::random_path_circular(seed);
    const TransversalMatroid rm = matroid_of(bicircular(r.graph()));
    for (std::size_t p = 0; p < rm.ground().size(); ++p) {
      out.expect(rm.presentation().sets_containing(p).size() <= 2,
                 "a bicircular element lies in more than 2 sets");
    }
  }
  const std::array<CyclicInterval, 2> nested{{{0, 3}, {1, 2}}};
  bool rejected = false;
  try {
    multipath(6, nested);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  out.expect(rejected, "multipath accepted a contained interval");
  const std::array<CyclicInterval, 3> arcs{{{0, 2}, {2, 4}, {4, 1}}};
  out.expect(validate(multipath(5, arcs)).valid, "multipath 5 is invalid");
}

std::string run(const std::string& command) {
  std::string out;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  return out + "\n[status " + std::to_string(status) + "]\n";
}

void determinism(Outcome& out) {
  const std::string cli = TMAT_CLI_PATH;
  const std::string data = TMAT_DATA_DIR;
  const fs::path work = fs::temp_directory_path() / "tmat_acceptance";
  fs::remove_all(work);
  fs::create_directories(work / "1");
  fs::create_directories(work / "2");

  // Commands writing DOT get a per-run directory substituted for @.
  const std::vector<std::string> commands = {
      "rank " + data + "/overlapping_chain.json --set s,u,y",
      "dual-rank " + data + "/overlapping_chain.json --set e,s,t,u,v,w,x",
      "closure " + data + "/three_pairs.json --set u",
      "closure " + data + "/overlapping_chain.json --set e,s,t,u,v,w,x --dual",
      "maximal " + data + "/overlapping_chain.json",
      "alpha " + data + "/overlapping_chain.json --dual",
      "is-cotransversal " + data + "/three_pairs.json",
      "contract-check " + data + "/three_pairs.json --element e --dot @/a.dot",
      "contract-check " + data + "/four_copies.json --element e --dot @/c.dot",
      "contract " + data + "/overlapping_chain.json --element e",
      "contract " + data + "/three_pairs.json --element e",
      "minimal-graph " + data + "/overlapping_chain.json --element e",
      "pc-validate " + data + "/path_abc.json",
      "pc-build --bicircular " + data + "/k3.json --coloops 1 --dot @/k3.dot",
      "pc-build --cycle 5 --arc 0:2 2:4 4:1",
      "pc-delete " + data + "/path_abc.json --element q3",
      "pc-contract " + data + "/path_abc.json --element p --dot @/pc.dot",
      "selftest --seed 2 --cases 5",
  };
  for (const auto& command : commands) {
    std::array<std::string, 2> outputs;
    for (int r = 0; r < 2; ++r) {
      const std::string dir = (work / std::to_string(r + 1)).string();
      std::string c = command;
      for (std::size_t at = c.find('@'); at != std::string::npos;
           at = c.find('@')) {
        c.replace(at, 1, dir);
      }
      outputs[r] = run(cli + " " + c);
    }
    out.expect(outputs[0] == outputs[1], "output differs: tmat " + command);
    out.expect(outputs[0].find("[status 0]") != std::string::npos ||
                   command.rfind("contract " + data + "/three_pairs", 0) == 0,
               "unexpected failure: tmat " + command + "\n" + outputs[0]);
  }
  for (const char* dot : {"a.dot", "c.dot", "k3.dot", "pc.dot"}) {
    const fs::path one = work / "1" / dot;
    const fs::path two = work / "2" / dot;
    if (!fs::exists(one) || !fs::exists(two)) {
      out.expect(false, std::string("missing DOT file ") + dot);
      continue;
    }
    out.expect(io::read_file(one) == io::read_file(two),
               std::string("DOT differs: ") + dot);
  }
  fs::remove_all(work);
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no stated limit
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three pairs: triangle, not transversal", 1, three_pairs_case},
      {2, "overlapping chain: unique path, synthesis", 1, overlapping_chain_case},
      {3, "four copies: every tree of K4, U_{3,4}", 1, four_copies_case},
      {4, "dual rank and independence cross-oracle", 30, cross_oracle},
      {5, "cyclic flats and maximal presentations", 20, cyclic_flats_suite},
      {6, "contraction verdict triple agreement", 60, triple_agreement},
      {7, "synthesis verification tripwire", 0, synthesis},
      {8, "path-circular minors", 60, path_circular_suite},
      {9, "class constructors", 1, constructors},
      {10, "CLI determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& ex) {
      outcome.failures.push_back(std::string("exception: ") + ex.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      outcome.failures.push_back("took longer than the limit");
    }
    const bool pass = outcome.failures.empty();
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL")
              << " (" << c.title << ", " << timing;
    if (c.limit_seconds > 0) std::cout << " of " << c.limit_seconds << "s";
    std::cout << ")\n";
    for (const auto& f : outcome.failures) std::cout << "  " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
