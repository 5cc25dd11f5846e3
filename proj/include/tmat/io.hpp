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

#include <filesystem>
#include <string>
#include <string_view>

#include "tmat/contraction.hpp"
#include "tmat/cotransversal.hpp"
#include "tmat/oracle_harness.hpp"
#include "tmat/path_circular.hpp"
#include "tmat/presentation.hpp"

namespace tmat::io {

// Throws ParseError if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

// {"elements": [...], "sets": [[...], ...]}. Unknown keys, unknown or
// duplicate labels, and wrong types are ParseErrors.
Presentation presentation_from_json(std::string_view text);
std::string presentation_to_json(const Presentation& pres);

// {"vertices": [...], "edges": [[u, v], ...]}. Other instance keys are
// accepted and ignored, so an instance file can be read as its graph.
SimpleGraph graph_from_json(std::string_view text);

// {"vertices": [...], "edges": [[u, v], ...], "paths": [[...], ...]} with an
// optional "labels" list naming the paths. Path-circular conditions are not
// checked here; see validate().
PathCircularInstance instance_from_json(std::string_view text);
std::string instance_to_json(const PathCircularInstance& instance);

// [{"flat": [...], "alpha": k}, ...] in table order.
std::string alpha_table_to_json(const GroundSet& ground,
                                const AlphaTable& table);

// Undirected DOT; each vertex is labelled "i: {set}".
std::string presenting_graph_to_dot(const Presentation& pres,
                                    const PresentingGraph& graph);

// Undirected DOT of the host graph with the paths listed in a legend node.
std::string instance_to_dot(const PathCircularInstance& instance);

std::string selftest_to_json(const oracle::SelftestReport& report);

}  // namespace tmat::io
