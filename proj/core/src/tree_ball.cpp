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
#include "rbg/tree_ball.hpp"

#include <limits>

#include "rbg/errors.hpp"

namespace rbg {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Degree of a vertex at the given level.
std::size_t degree_at(std::size_t level, std::size_t l, std::size_t m, RootSide side) {
  const bool root_is_l = side == RootSide::DegreeL;
  const bool even = level % 2 == 0;
  return (even == root_is_l) ? l : m;
}

}  // namespace

std::size_t TreeBall::full_degree(Vertex v) const {
  return degree_at(level[static_cast<std::size_t>(v)], l, m, root_side);
}

std::vector<std::size_t> level_counts_closed_form(std::size_t l, std::size_t m,
                                                  std::size_t radius, RootSide root_side) {
  if (l < 2 || m < 2) throw PreconditionError("tree degrees must be at least 2");
  std::vector<std::size_t> counts{1};
  for (std::size_t i = 1; i <= radius; ++i) {
    const std::size_t parent_degree = degree_at(i - 1, l, m, root_side);
    counts.push_back(sat_mul(counts.back(), i == 1 ? parent_degree : parent_degree - 1));
  }
  return counts;
}

TreeBall biregular_tree_ball(std::size_t l, std::size_t m, std::size_t radius,
                             RootSide root_side, std::size_t ceiling) {
  const auto counts = level_counts_closed_form(l, m, radius, root_side);
  std::size_t total = 0;
  for (std::size_t c : counts) total = sat_add(total, c);
  if (total > ceiling)
    throw CeilingExceeded("tree ball would have " +
                              (total == kSaturated ? std::string("more than 2^64")
                                                   : std::to_string(total)) +
                              " vertices, above the ceiling of " + std::to_string(ceiling),
                          total);

  TreeBall ball;
  ball.radius = radius;
  ball.l = l;
  ball.m = m;
  ball.root_side = root_side;
  ball.level.reserve(total);
  ball.level.push_back(0);
  std::vector<Edge> edges;
  edges.reserve(total - 1);
  // Vertices are appended level by level, so [begin, end) is the frontier.
  std::size_t begin = 0, end = 1;
  for (std::size_t depth = 0; depth < radius; ++depth) {
    const std::size_t children = depth == 0 ? degree_at(0, l, m, root_side)
                                            : degree_at(depth, l, m, root_side) - 1;
    for (std::size_t parent = begin; parent < end; ++parent) {
      for (std::size_t c = 0; c < children; ++c) {
        const auto child = static_cast<Vertex>(ball.level.size());
        ball.level.push_back(depth + 1);
        edges.emplace_back(static_cast<Vertex>(parent), child);
      }
    }
    begin = end;
    end = ball.level.size();
  }
  std::vector<int> parts(ball.level.size());
  for (std::size_t v = 0; v < parts.size(); ++v)
    parts[v] = degree_at(ball.level[v], l, m, root_side) == l && (l != m || ball.level[v] % 2 == 0)
                   ? 0
                   : 1;
  ball.graph = Graph(ball.level.size(), std::move(edges), std::move(parts));
  ball.level_counts.assign(radius + 1, 0);
  for (std::size_t lv : ball.level) ++ball.level_counts[lv];
  return ball;
}

bool validate_tree_ball(const TreeBall& ball) {
  const Graph& g = ball.graph;
  if (g.vertex_count() == 0 || g.edge_count() + 1 != g.vertex_count()) return false;
  if (!is_connected(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (ball.is_interior(vv) && g.degree(vv) != ball.full_degree(vv)) return false;
    if (!ball.is_interior(vv) && ball.level[v] != ball.radius) return false;
  }
  return true;
}

}  // namespace rbg
