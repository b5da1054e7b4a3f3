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
#include "rbg/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "rbg/errors.hpp"

namespace rbg {

using nlohmann::json;

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("graph file: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw ParseError("graph file: 'n' must be a non-negative integer");
  const auto n = doc["n"].get<long long>();
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("graph file: 'edges' must be an array");
  for (const auto& [key, _] : doc.items())
    if (key != "n" && key != "edges" && key != "parts")
      throw ParseError("graph file: unknown field '" + key + "'");

  std::vector<Edge> edges;
  std::size_t index = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("graph file: edges[" + std::to_string(index) +
                       "] must be a pair of integers");
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("graph file: edges[" + std::to_string(index) + "] = [" +
                       std::to_string(u) + ", " + std::to_string(v) + "] out of range for n = " +
                       std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++index;
  }
  std::optional<std::vector<int>> parts;
  if (doc.contains("parts")) {
    if (!doc["parts"].is_array()) throw ParseError("graph file: 'parts' must be an array");
    parts.emplace();
    for (const auto& p : doc["parts"]) {
      if (!p.is_number_integer()) throw ParseError("graph file: 'parts' entries must be 0 or 1");
      parts->push_back(p.get<int>());
    }
  }
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges), std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph file: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  json doc;
  doc["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (g.parts()) doc["parts"] = *g.parts();
  return doc;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError("graph file '" + path + "': " + e.what());
  }
  return graph_from_json(doc);
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  out << graph_to_json(g).dump() << "\n";
}

void write_dot(const Graph& g, std::ostream& os, const std::string& extra_label) {
  os << "graph G {\n";
  if (!extra_label.empty()) {
    std::string escaped;
    for (char c : extra_label) {
      if (c == '"' || c == '\\') escaped += '\\';
      if (c == '\n') {
        escaped += "\\l";
        continue;
      }
      escaped += c;
    }
    os << "  label=\"" << escaped << "\";\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (g.parts())
      os << " [color=" << ((*g.parts())[v] == 0 ? "red" : "blue") << "]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

std::string to_dot(const Graph& g, const std::string& extra_label) {
  std::ostringstream os;
  write_dot(g, os, extra_label);
  return os.str();
}

}  // namespace rbg
