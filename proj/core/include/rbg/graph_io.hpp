// Copyright 2026 The rbg Authors
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

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

#include "rbg/graph.hpp"

namespace rbg {

/// Graph file: {"n": int, "edges": [[u, v], ...], "parts": [0|1, ...]?}.
/// Throws ParseError with a diagnostic for any schema violation.
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

/// Undirected DOT. Vertices coloured by part when a colouring is present;
/// extra_label (if non-empty) becomes the graph label.
void write_dot(const Graph& g, std::ostream& os, const std::string& extra_label = {});
std::string to_dot(const Graph& g, const std::string& extra_label = {});

}  // namespace rbg
