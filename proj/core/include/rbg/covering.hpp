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

#include <cstdint>
#include <vector>

#include "rbg/graph.hpp"
#include "rbg/structure.hpp"
#include "rbg/tree_ball.hpp"

namespace rbg {

/// A vertex map from a domain graph to a codomain graph, together with the
/// domain vertices at which local bijectivity is required. For a tree ball
/// the boundary sphere is exempt; for a whole graph every vertex is
/// interior.
struct CoveringCandidate {
  Graph domain;
  std::vector<bool> interior;
  Graph codomain;
  std::vector<Vertex> vertex_map;

  static CoveringCandidate from_tree_ball(const TreeBall& ball, Graph codomain,
                                          std::vector<Vertex> vertex_map);
  static CoveringCandidate from_graph(Graph domain, Graph codomain,
                                      std::vector<Vertex> vertex_map);
};

/// True iff for every interior domain vertex v the map restricted to N(v) is
/// a bijection onto N(f(v)), and, when both graphs carry a colouring, the map
/// respects it up to a global swap.
///
/// Throws PreconditionError if the codomain is disconnected or the map is not
/// defined on every domain vertex (or points outside the codomain).
bool check_local_covering(const CoveringCandidate& c);

/// For externally supplied quotient graphs: g must be a bigraph of bidegree
/// exactly (p^3 + 1, p + 1) with n1 (p^3 + 1) = n2 (p + 1) = |E|.
/// Map of a tree ball onto a graph of the same bidegrees by unfolding from
/// root_image: children of v go, in order, to the neighbours of f(v) other
/// than f(parent). Throws PreconditionError when a degree does not match.
std::vector<Vertex> unfold_tree_ball(const TreeBall& ball, const Graph& codomain, Vertex root_image);

bool quotient_handshake_check(const Graph& g, std::int64_t p);

/// Same contract for quotient data given only as a declared profile and edge
/// count. Also rejects profiles no simple graph can realise (l > n2 or
/// m > n1).
bool quotient_handshake_check(const BiregularProfile& profile, std::size_t edge_count,
                              std::int64_t p);

}  // namespace rbg
