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

#include "tmat/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "tmat/errors.hpp"

namespace tmat::io {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

json parse_object(std::string_view text, const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (required.count(key) == 0 && optional.count(key) == 0) {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  for (const auto& key : required) {
    if (!doc.contains(key)) throw ParseError("missing key \"" + key + "\"");
  }
  return doc;
}

std::vector<std::string> string_list(const json& value, const std::string& what) {
  if (!value.is_array()) throw ParseError(what + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw ParseError(what + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

GroundSet make_ground(std::vector<std::string> labels) {
  try {
    return GroundSet(std::move(labels));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("elements: ") + ex.what());
  } catch (const std::length_error& ex) {
    throw ParseError(std::string("elements: ") + ex.what());
  }
}

std::string compact(const json& value) { return value.dump(); }

json labels_json(const GroundSet& ground, ElementSet s) {
  json out = json::array();
  for (std::size_t i : s) out.push_back(ground.label(i));
  return out;
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Presentation presentation_from_json(std::string_view text) {
  const json doc = parse_object(text, {"elements", "sets"}, {});
  const GroundSet ground = make_ground(string_list(doc["elements"], "elements"));
  if (!doc["sets"].is_array()) throw ParseError("sets must be a list");
  std::vector<ElementSet> sets;
  for (const auto& item : doc["sets"]) {
    ElementSet s;
    for (const auto& label : string_list(item, "each set")) {
      const auto i = ground.find(label);
      if (!i) throw ParseError("set names unknown element \"" + label + "\"");
      s = s.with(*i);
    }
    sets.push_back(s);
  }
  return Presentation(ground, std::move(sets));
}

std::string presentation_to_json(const Presentation& pres) {
  std::ostringstream os;
  json elements(std::vector<std::string>(pres.ground().labels().begin(),
                                         pres.ground().labels().end()));
  os << "{\n  \"elements\": " << compact(elements) << ",\n  \"sets\": [";
  for (std::size_t i = 0; i < pres.size(); ++i) {
    os << (i == 0 ? "\n    " : ",\n    ")
       << compact(labels_json(pres.ground(), pres[i]));
  }
  os << (pres.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

namespace {

SimpleGraph graph_of(const json& doc) {
  std::vector<std::string> names = string_list(doc["vertices"], "vertices");
  if (!doc["edges"].is_array()) throw ParseError("edges must be a list");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& item : doc["edges"]) {
    const auto ends = string_list(item, "each edge");
    if (ends.size() != 2) throw ParseError("each edge must name two vertices");
    edges.emplace_back(ends[0], ends[1]);
  }
  SimpleGraph graph;
  try {
    graph = SimpleGraph::from_names(std::move(names), edges);
  } catch (const DomainError& ex) {
    throw ParseError(ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  return graph;
}

}  // namespace

SimpleGraph graph_from_json(std::string_view text) {
  return graph_of(
      parse_object(text, {"vertices", "edges"}, {"paths", "labels"}));
}

PathCircularInstance instance_from_json(std::string_view text) {
  const json doc =
      parse_object(text, {"vertices", "edges", "paths"}, {"labels"});
  SimpleGraph graph = graph_of(doc);
  if (!doc["paths"].is_array()) throw ParseError("paths must be a list");
  std::vector<VertexPath> paths;
  for (const auto& item : doc["paths"]) {
    VertexPath path;
    for (const auto& name : string_list(item, "each path")) {
      const auto v = graph.find(name);
      if (!v) throw ParseError("path names unknown vertex \"" + name + "\"");
      path.vertices.push_back(*v);
    }
    paths.push_back(std::move(path));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    labels = string_list(doc["labels"], "labels");
    if (labels.size() != paths.size()) {
      throw ParseError("labels must name every path");
    }
  }
  try {
    return PathCircularInstance(std::move(graph), std::move(paths),
                                std::move(labels));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  } catch (const std::length_error& ex) {
    throw ParseError(ex.what());
  }
}

std::string instance_to_json(const PathCircularInstance& instance) {
  const SimpleGraph& g = instance.graph();
  std::ostringstream os;
  json vertices(std::vector<std::string>(g.names().begin(), g.names().end()));
  os << "{\n  \"vertices\": " << compact(vertices) << ",\n  \"edges\": [";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    os << (first ? "\n    " : ",\n    ")
       << compact(json::array({g.name(a), g.name(b)}));
    first = false;
  }
  os << (first ? "]" : "\n  ]") << ",\n  \"paths\": [";
  first = true;
  for (const auto& path : instance.paths()) {
    json names = json::array();
    for (std::size_t v : path.vertices) names.push_back(g.name(v));
    os << (first ? "\n    " : ",\n    ") << compact(names);
    first = false;
  }
  os << (first ? "]" : "\n  ]") << ",\n  \"labels\": "
     << compact(json(std::vector<std::string>(instance.labels().begin(),
                                              instance.labels().end())))
     << "\n}\n";
  return os.str();
}

std::string alpha_table_to_json(const GroundSet& ground,
                                const AlphaTable& table) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& entry : table.entries()) {
    ordered_json row;
    row["flat"] = labels_json(ground, entry.flat);
    row["alpha"] = entry.alpha;
    os << (first ? "\n  " : ",\n  ") << row.dump();
    first = false;
  }
  os << (first ? "]\n" : "\n]\n");
  return os.str();
}

std::string presenting_graph_to_dot(const Presentation& pres,
                                    const PresentingGraph& graph) {
  std::ostringstream os;
  os << "graph presenting {\n";
  os << "  label=" << dot_quote("pivot " + pres.ground().label(graph.pivot()))
     << ";\n";
  for (std::size_t v : graph.vertices()) {
    os << "  n" << v << " [label="
       << dot_quote(std::to_string(v) + ": " + pres.ground().format(pres[v]))
       << "];\n";
  }
  for (const auto& edge : graph.edges()) {
    os << "  n" << edge.a << " -- n" << edge.b << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string instance_to_dot(const PathCircularInstance& instance) {
  const SimpleGraph& g = instance.graph();
  std::ostringstream os;
  os << "graph instance {\n";
  for (const auto& name : g.names()) os << "  " << dot_quote(name) << ";\n";
  for (const auto& [a, b] : g.edges()) {
    os << "  " << dot_quote(g.name(a)) << " -- " << dot_quote(g.name(b))
       << ";\n";
  }
  std::string legend;
  for (std::size_t p = 0; p < instance.path_count(); ++p) {
    legend += instance.labels()[p] + ":";
    const auto& vs = instance.paths()[p].vertices;
    if (vs.empty()) legend += " (null)";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      legend += (i == 0 ? " " : " - ") + g.name(vs[i]);
    }
    legend += "\\l";
  }
  os << "  legend [shape=box, label=" << '"';
  for (char c : legend) {
    if (c == '"') os << '\\';
    os << c;
  }
  os << "\"];\n}\n";
  return os.str();
}

std::string selftest_to_json(const oracle::SelftestReport& report) {
  ordered_json doc;
  doc["seed"] = report.seed;
  doc["cases"] = report.cases;
  doc["passed"] = report.passed();
  doc["checks"] = ordered_json::array();
  for (const auto& check : report.checks) {
    ordered_json row;
    row["name"] = check.name;
    row["instances"] = check.instances;
    row["failures"] = check.failures;
    row["witness"] = check.witness ? ordered_json(*check.witness)
                                   : ordered_json(nullptr);
    doc["checks"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

}  // namespace tmat::io
