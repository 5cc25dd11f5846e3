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

// tmat: command-line front end for the transversal matroid library.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmat/contraction.hpp"
#include "tmat/cotransversal.hpp"
#include "tmat/errors.hpp"
#include "tmat/io.hpp"
#include "tmat/matroid.hpp"
#include "tmat/matroid_ops.hpp"
#include "tmat/oracle_harness.hpp"
#include "tmat/path_circular.hpp"
#include "tmat/rank_oracle.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kVerification = 4,
};

struct Options {
  std::string input;
  std::string element;
  std::string dot;
  std::string set;
  bool set_given = false;
  bool use_dual = false;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::size_t max_ground = tmat::kDefaultMaxGround;
  std::string bicircular;
  std::size_t cycle = 0;
  std::vector<std::string> arcs;
  std::size_t coloops = 0;
};

tmat::TransversalMatroid load_matroid(const Options& o) {
  return tmat::TransversalMatroid(
      tmat::io::presentation_from_json(tmat::io::read_file(o.input)));
}

tmat::PathCircularInstance load_instance(const Options& o) {
  return tmat::io::instance_from_json(tmat::io::read_file(o.input));
}

tmat::ElementSet chosen_set(const tmat::GroundSet& ground, const Options& o) {
  if (!o.set_given) return ground.full();
  std::vector<std::string> labels;
  std::istringstream in(o.set);
  for (std::string label; std::getline(in, label, ',');) {
    if (!label.empty()) labels.push_back(label);
  }
  return ground.set_of(labels);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string labels_line(const tmat::GroundSet& ground, tmat::ElementSet s) {
  return ground.format(s);
}

int cmd_rank(const Options& o, bool dual) {
  const auto m = load_matroid(o);
  const tmat::ElementSet x = chosen_set(m.ground(), o);
  const tmat::RankOracle view(m);
  std::cout << (dual ? tmat::dual_rank(view, x) : view.rank(x)) << "\n";
  return kOk;
}

int cmd_closure(const Options& o) {
  const auto m = load_matroid(o);
  const tmat::ElementSet x = chosen_set(m.ground(), o);
  const tmat::RankOracle view(m);
  const tmat::ElementSet c =
      o.use_dual ? tmat::dual_closure(view, x) : tmat::closure(view, x);
  std::cout << labels_line(m.ground(), c) << "\n";
  return kOk;
}

int cmd_maximal(const Options& o) {
  const auto m = tmat::normalize_presentation(load_matroid(o), o.max_ground);
  std::cout << tmat::io::presentation_to_json(tmat::maximal_presentation(m));
  return kOk;
}

tmat::RankOracle alpha_target(const Options& o) {
  const tmat::RankOracle view(load_matroid(o));
  return o.use_dual ? tmat::dual(view) : view;
}

int cmd_alpha(const Options& o) {
  const tmat::RankOracle m = alpha_target(o);
  std::cout << tmat::io::alpha_table_to_json(
      m.ground(), tmat::alpha_table(m, o.max_ground));
  return kOk;
}

int cmd_is_cotransversal(const Options& o) {
  const tmat::RankOracle m = alpha_target(o);
  const auto verdict = tmat::is_cotransversal(m, o.max_ground);
  if (verdict.cotransversal) {
    std::cout << "CO-TRANSVERSAL\n";
  } else {
    std::cout << "NOT CO-TRANSVERSAL (alpha("
              << m.ground().format(*verdict.witness)
              << ") = " << verdict.witness_alpha << ")\n";
  }
  return kOk;
}

std::string kind_note(tmat::PivotKind kind, const std::string& e) {
  switch (kind) {
    case tmat::PivotKind::kLoop:
      return "TRANSVERSAL (" + e + " is a loop; contraction equals deletion)";
    case tmat::PivotKind::kColoop:
      return "TRANSVERSAL (" + e +
             " is a coloop; contraction equals deletion)";
    case tmat::PivotKind::kOrdinary:
      break;
  }
  return {};
}

int cmd_contract_check(const Options& o) {
  const auto m = load_matroid(o);
  const auto check =
      tmat::is_contraction_transversal(m, o.element, o.max_ground);
  if (check.kind != tmat::PivotKind::kOrdinary) {
    std::cout << kind_note(check.kind, o.element) << "\n";
  } else if (check.transversal) {
    std::cout << "TRANSVERSAL (minimal presenting graph is a tree)\n";
  } else {
    std::cout << "NOT TRANSVERSAL (minimal presenting graph has a cycle)\n";
  }
  if (!o.dot.empty()) {
    const tmat::PresentingGraph g =
        check.kind == tmat::PivotKind::kOrdinary
            ? check.graph
            : tmat::PresentingGraph(m.ground().index_of(o.element), {}, {});
    write_text(o.dot, tmat::io::presenting_graph_to_dot(
                          check.normalized.presentation(), g));
  }
  return kOk;
}

int cmd_contract(const Options& o) {
  const auto m = load_matroid(o);
  const auto out = tmat::contract_presentation(m, o.element, o.max_ground);
  std::cout << tmat::io::presentation_to_json(out.presentation) << "VERIFIED\n";
  return kOk;
}

int cmd_minimal_graph(const Options& o) {
  const auto m = tmat::normalize_presentation(load_matroid(o), o.max_ground);
  const auto g = tmat::minimal_presenting_graph(m, o.element);
  const std::string dot =
      tmat::io::presenting_graph_to_dot(m.presentation(), g);
  if (o.dot.empty()) {
    std::cout << dot;
  } else {
    write_text(o.dot, dot);
  }
  return kOk;
}

int cmd_pc_validate(const Options& o) {
  const auto instance = load_instance(o);
  const tmat::Validation v = tmat::validate(instance);
  if (v.valid) {
    std::cout << "VALID\n";
    return kOk;
  }
  std::cout << "INVALID\n";
  for (const auto& violation : v.violations) {
    std::cout << "  " << tmat::describe(instance, violation) << "\n";
  }
  return kPrecondition;
}

tmat::CyclicInterval parse_arc(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw tmat::ParseError("arc must be start:end, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, colon);
    const std::string b = text.substr(colon + 1);
    const auto start = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const auto end = std::stoul(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {start, end};
  } catch (const std::logic_error&) {
    throw tmat::ParseError("arc must be start:end, got '" + text + "'");
  }
}

void emit_instance(const Options& o, const tmat::PathCircularInstance& inst) {
  std::cout << tmat::io::instance_to_json(inst);
  if (!o.dot.empty()) write_text(o.dot, tmat::io::instance_to_dot(inst));
}

int cmd_pc_build(const Options& o) {
  const int sources = (o.input.empty() ? 0 : 1) +
                      (o.bicircular.empty() ? 0 : 1) + (o.cycle != 0 ? 1 : 0);
  if (sources != 1) {
    std::cerr << "pc-build needs exactly one of an instance file, "
                 "--bicircular <graph.json>, or --cycle N\n";
    return kUsage;
  }
  tmat::PathCircularInstance inst;
  if (!o.input.empty()) {
    inst = load_instance(o);
  } else if (!o.bicircular.empty()) {
    inst = tmat::bicircular(
        tmat::io::graph_from_json(tmat::io::read_file(o.bicircular)));
  } else {
    std::vector<tmat::CyclicInterval> arcs;
    for (const auto& arc : o.arcs) arcs.push_back(parse_arc(arc));
    inst = tmat::multipath(o.cycle, arcs);
  }
  for (std::size_t i = 0; i < o.coloops; ++i) inst = tmat::add_coloop(inst);
  const tmat::Validation v = tmat::validate(inst);
  if (!v.valid) {
    throw tmat::PreconditionError("instance is not path-circular: " +
                                  tmat::describe(inst, v.violations.front()));
  }
  emit_instance(o, inst);
  return kOk;
}

int cmd_pc_delete(const Options& o) {
  const auto inst = load_instance(o);
  const tmat::Validation v = tmat::validate(inst);
  if (!v.valid) {
    throw tmat::PreconditionError("instance is not path-circular: " +
                                  tmat::describe(inst, v.violations.front()));
  }
  emit_instance(o, tmat::delete_path(inst, o.element));
  return kOk;
}

int cmd_pc_contract(const Options& o) {
  const auto inst = load_instance(o);
  tmat::ContractPathOptions options;
  options.max_ground = o.max_ground;
  emit_instance(o, tmat::contract_path(inst, o.element, options));
  return kOk;
}

int cmd_selftest(const Options& o) {
  tmat::oracle::SuiteOptions options;
  options.seed = o.seed;
  options.cases = o.cases;
  const auto report = tmat::oracle::run_selftest(options);
  std::cout << tmat::io::selftest_to_json(report);
  return report.passed() ? kOk : kVerification;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "presentation or instance JSON file")
      ->required();
}

void add_element(CLI::App* sub, Options& o, const std::string& what) {
  sub->add_option("--element", o.element, what)->required();
}

void add_max_ground(CLI::App* sub, Options& o) {
  sub->add_option("--max-ground", o.max_ground,
                  "largest ground set for exhaustive checks")
      ->capture_default_str();
}

CLI::Option* add_set(CLI::App* sub, Options& o) {
  return sub
      ->add_option("--set", o.set,
                   "comma-separated element labels (default: all)")
      ->expected(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal matroids: contraction checks and path-circular "
               "instances"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  auto bind = [&action](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* rank = app.add_subcommand("rank", "rank of a subset");
  add_input(rank, o);
  CLI::Option* rank_set = add_set(rank, o);
  bind(rank, [&o, rank_set] {
    o.set_given = rank_set->count() > 0;
    return cmd_rank(o, false);
  });

  auto* dual_rank = app.add_subcommand("dual-rank", "rank in the dual");
  add_input(dual_rank, o);
  CLI::Option* dual_rank_set = add_set(dual_rank, o);
  bind(dual_rank, [&o, dual_rank_set] {
    o.set_given = dual_rank_set->count() > 0;
    return cmd_rank(o, true);
  });

  auto* closure = app.add_subcommand("closure", "closure of a subset");
  add_input(closure, o);
  CLI::Option* closure_set = add_set(closure, o);
  closure->add_flag("--dual", o.use_dual, "closure in the dual");
  bind(closure, [&o, closure_set] {
    o.set_given = closure_set->count() > 0;
    return cmd_closure(o);
  });

  auto* maximal =
      app.add_subcommand("maximal", "maximal presentation (sets coclosed)");
  add_input(maximal, o);
  add_max_ground(maximal, o);
  bind(maximal, [&o] { return cmd_maximal(o); });

  auto* alpha = app.add_subcommand("alpha", "alpha on the cyclic flats");
  add_input(alpha, o);
  alpha->add_flag("--dual", o.use_dual, "use the dual matroid");
  add_max_ground(alpha, o);
  bind(alpha, [&o] { return cmd_alpha(o); });

  auto* cotrans = app.add_subcommand("is-cotransversal",
                                     "alpha >= 0 on every subset");
  add_input(cotrans, o);
  cotrans->add_flag("--dual", o.use_dual, "use the dual matroid");
  add_max_ground(cotrans, o);
  bind(cotrans, [&o] { return cmd_is_cotransversal(o); });

  auto* check = app.add_subcommand("contract-check",
                                   "is the contraction by an element "
                                   "transversal");
  add_input(check, o);
  add_element(check, o, "element to contract");
  check->add_option("--dot", o.dot, "write the minimal presenting graph");
  add_max_ground(check, o);
  bind(check, [&o] { return cmd_contract_check(o); });

  auto* contract =
      app.add_subcommand("contract", "presentation of the contraction");
  add_input(contract, o);
  add_element(contract, o, "element to contract");
  add_max_ground(contract, o);
  bind(contract, [&o] { return cmd_contract(o); });

  auto* minimal = app.add_subcommand("minimal-graph",
                                     "minimal presenting graph as DOT");
  add_input(minimal, o);
  add_element(minimal, o, "pivot element");
  minimal->add_option("--dot", o.dot, "write to this file instead of stdout");
  add_max_ground(minimal, o);
  bind(minimal, [&o] { return cmd_minimal_graph(o); });

  auto* pc_validate =
      app.add_subcommand("pc-validate", "check the path-circular conditions");
  add_input(pc_validate, o);
  bind(pc_validate, [&o] { return cmd_pc_validate(o); });

  auto* pc_build = app.add_subcommand(
      "pc-build", "build an instance (from a file, bicircular, or multipath)");
  pc_build->add_option("input", o.input, "instance JSON file");
  pc_build->add_option("--bicircular", o.bicircular,
                       "graph JSON; one path per edge");
  pc_build->add_option("--cycle", o.cycle, "cycle length for a multipath");
  pc_build->add_option("--arc", o.arcs, "arc start:end on the cycle");
  pc_build->add_option("--coloops", o.coloops, "append this many coloops");
  pc_build->add_option("--dot", o.dot, "also write the instance as DOT");
  bind(pc_build, [&o] { return cmd_pc_build(o); });

  auto* pc_delete = app.add_subcommand("pc-delete", "delete a path");
  add_input(pc_delete, o);
  add_element(pc_delete, o, "path label");
  pc_delete->add_option("--dot", o.dot, "also write the result as DOT");
  bind(pc_delete, [&o] { return cmd_pc_delete(o); });

  auto* pc_contract = app.add_subcommand("pc-contract", "contract a path");
  add_input(pc_contract, o);
  add_element(pc_contract, o, "path label");
  pc_contract->add_option("--dot", o.dot, "also write the result as DOT");
  add_max_ground(pc_contract, o);
  bind(pc_contract, [&o] { return cmd_pc_contract(o); });

  auto* selftest =
      app.add_subcommand("selftest", "run the randomized oracle suites");
  selftest->add_option("--seed", o.seed, "run seed")->capture_default_str();
  selftest->add_option("--cases", o.cases, "cases per check")
      ->capture_default_str();
  bind(selftest, [&o] { return cmd_selftest(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const tmat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const tmat::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const tmat::DomainError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const tmat::SizeBoundError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const tmat::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerification;
  }
}
