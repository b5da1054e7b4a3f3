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
#include "rbg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rbg/errors.hpp"

namespace rbg {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::optional<std::vector<int>> parts)
    : adjacency_(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") references a vertex outside [0, " + std::to_string(n) + ")");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                std::to_string(dup->second) + ")");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  if (parts) {
    if (parts->size() != n) throw std::invalid_argument("parts must have one entry per vertex");
    for (int p : *parts)
      if (p != 0 && p != 1) throw std::invalid_argument("parts entries must be 0 or 1");
    for (const auto& [u, v] : edges_)
      if ((*parts)[static_cast<std::size_t>(u)] == (*parts)[static_cast<std::size_t>(v)])
        throw std::invalid_argument("parts is not a proper 2-colouring: edge (" +
                                    std::to_string(u) + ", " + std::to_string(v) + ")");
    parts_ = std::move(parts);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || static_cast<std::size_t>(u) >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_parts(std::vector<int> parts) const {
  return Graph(vertex_count(), edges_, std::move(parts));
}

std::vector<int> connected_components(const Graph& g, int* count) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    label[s] = next;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

}  // namespace rbg
