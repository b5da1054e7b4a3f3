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
#include <string>
#include <vector>

#include "rbg/graph.hpp"

namespace rbg {

struct RegularProfile {
  std::size_t k = 0;
};

/// n1 vertices of degree l and n2 of degree m, l >= m. For a simple
/// bipartite graph n1 * l = n2 * m = |E| and hence n2 >= n1.
struct BiregularProfile {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  bool handshake_holds(std::size_t edge_count) const {
    return n1 * l == edge_count && n2 * m == edge_count;
  }
};

enum class GraphClass { Bigraph, Regular, Unclassified };
std::string to_string(GraphClass c);

struct StructureReport {
  bool connected = false;
  /// Proper 2-colouring; side 0 holds the degree-l vertices of a bigraph.
  std::optional<std::vector<int>> bipartition;
  std::optional<RegularProfile> regular;
  std::optional<BiregularProfile> biregular;

  /// Bigraph when bipartite with constant degree on each side (this includes
  /// regular bipartite graphs with l = m), else Regular, else Unclassified.
  GraphClass classification() const;
};

/// BFS two-colouring, degree collection and classification. Uses the
/// graph's own parts when present. Never throws for well-formed graphs.
StructureReport analyze_structure(const Graph& g);

}  // namespace rbg
