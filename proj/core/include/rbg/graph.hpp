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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rbg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite undirected simple graph with an optional two-colouring.
///
/// Edges are stored normalised (u < v) and sorted. Construction rejects
/// loops, duplicate edges, out-of-range endpoints and, when parts are given,
/// colourings that are not proper or not 0/1.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges,
        std::optional<std::vector<int>> parts = std::nullopt);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  const std::optional<std::vector<int>>& parts() const { return parts_; }

  /// Copy with the given colouring attached (validated).
  Graph with_parts(std::vector<int> parts) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<std::vector<int>> parts_;
};

/// Vertex labels of connected components, numbered from 0 in BFS order.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

}  // namespace rbg
