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
#include <cstdint>
#include <vector>

#include "rbg/graph.hpp"
#include "rbg/structure.hpp"

namespace rbg {

/// Which degree the root of a ball carries.
enum class RootSide { DegreeL, DegreeM };

inline constexpr std::size_t kDefaultTreeCeiling = 200000;

/// Ball of radius r around a vertex of the (l, m)-biregular tree. Vertices
/// are numbered in BFS order from the root (vertex 0); parts()[v] is 0 for
/// degree-l vertices and 1 for degree-m vertices.
struct TreeBall {
  Graph graph;
  Vertex root = 0;
  std::size_t radius = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  RootSide root_side = RootSide::DegreeL;
  std::vector<std::size_t> level_counts;
  std::vector<std::size_t> level;

  /// Non-boundary vertices (level < radius) must have full degree.
  bool is_interior(Vertex v) const { return level[static_cast<std::size_t>(v)] < radius; }
  std::size_t full_degree(Vertex v) const;
};

/// c_0 = 1, c_1 = deg(root), and each later level multiplies by the parent
/// level's degree minus one. Saturates at SIZE_MAX. Requires l, m >= 2.
std::vector<std::size_t> level_counts_closed_form(std::size_t l, std::size_t m,
                                                  std::size_t radius,
                                                  RootSide root_side = RootSide::DegreeL);

/// Breadth-first construction. Throws CeilingExceeded (carrying the would-be
/// vertex count) when the ball would exceed ceiling vertices.
TreeBall biregular_tree_ball(std::size_t l, std::size_t m, std::size_t radius,
                             RootSide root_side = RootSide::DegreeL,
                             std::size_t ceiling = kDefaultTreeCeiling);

/// Connected with |E| = |V| - 1, and every interior vertex has full degree.
bool validate_tree_ball(const TreeBall& ball);

}  // namespace rbg
