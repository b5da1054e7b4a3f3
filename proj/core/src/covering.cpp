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
#include "rbg/covering.hpp"

#include <algorithm>

#include "rbg/errors.hpp"
#include "rbg/number_fields.hpp"

namespace rbg {

CoveringCandidate CoveringCandidate::from_tree_ball(const TreeBall& ball, Graph codomain,
                                                    std::vector<Vertex> vertex_map) {
  CoveringCandidate c{ball.graph, {}, std::move(codomain), std::move(vertex_map)};
  c.interior.resize(ball.graph.vertex_count());
  for (std::size_t v = 0; v < c.interior.size(); ++v)
    c.interior[v] = ball.is_interior(static_cast<Vertex>(v));
  return c;
}

CoveringCandidate CoveringCandidate::from_graph(Graph domain, Graph codomain,
                                                std::vector<Vertex> vertex_map) {
  std::vector<bool> interior(domain.vertex_count(), true);
  return {std::move(domain), std::move(interior), std::move(codomain), std::move(vertex_map)};
}

bool check_local_covering(const CoveringCandidate& c) {
  const Graph& dom = c.domain;
  const Graph& cod = c.codomain;
  if (!is_connected(cod)) throw PreconditionError("covering codomain must be connected");
  if (c.vertex_map.size() != dom.vertex_count())
    throw PreconditionError("vertex map defined on " + std::to_string(c.vertex_map.size()) +
                            " of " + std::to_string(dom.vertex_count()) + " domain vertices");
  if (c.interior.size() != dom.vertex_count())
    throw PreconditionError("interior mask size does not match the domain");
  for (Vertex img : c.vertex_map)
    if (img < 0 || static_cast<std::size_t>(img) >= cod.vertex_count())
      throw PreconditionError("vertex map points outside the codomain");

  if (dom.parts() && cod.parts() && dom.vertex_count() > 0) {
    const auto& dp = *dom.parts();
    const auto& cp = *cod.parts();
    const int flip = dp[0] ^ cp[static_cast<std::size_t>(c.vertex_map[0])];
    for (std::size_t v = 0; v < dom.vertex_count(); ++v)
      if ((dp[v] ^ cp[static_cast<std::size_t>(c.vertex_map[v])]) != flip) return false;
  }

  std::vector<Vertex> images;
  for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
    if (!c.interior[v]) continue;
    const Vertex fv = c.vertex_map[v];
    const auto target = cod.neighbors(fv);
    const auto source = dom.neighbors(static_cast<Vertex>(v));
    if (source.size() != target.size()) return false;
    images.clear();
    for (Vertex w : source) images.push_back(c.vertex_map[static_cast<std::size_t>(w)]);
    std::sort(images.begin(), images.end());
    // Both sorted: equal sequences mean a bijection onto N(f(v)).
    if (!std::equal(images.begin(), images.end(), target.begin(), target.end())) return false;
  }
  return true;
}

bool quotient_handshake_check(const BiregularProfile& profile, std::size_t edge_count,
                              std::int64_t p) {
  require_prime(p, "quotient_handshake_check");
  const auto pp = static_cast<std::size_t>(p);
  const std::size_t l = pp * pp * pp + 1;
  const std::size_t m = pp + 1;
  if (profile.l != l || profile.m != m) return false;
  if (!profile.handshake_holds(edge_count)) return false;
  return profile.l <= profile.n2 && profile.m <= profile.n1;
}

std::vector<Vertex> unfold_tree_ball(const TreeBall& ball, const Graph& codomain, Vertex root_image) {
  const Graph& t = ball.graph;
  if (root_image < 0 || static_cast<std::size_t>(root_image) >= codomain.vertex_count())
    throw PreconditionError("root image out of range");
  std::vector<Vertex> f(t.vertex_count(), -1);
  std::vector<Vertex> parent(t.vertex_count(), -1);
  f[static_cast<std::size_t>(ball.root)] = root_image;
  std::vector<Vertex> queue{ball.root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const auto vi = static_cast<std::size_t>(v);
    if (!ball.is_interior(v)) continue;
    if (codomain.degree(f[vi]) != ball.full_degree(v))
      throw PreconditionError("codomain degree differs from the tree degree at vertex " +
                              std::to_string(v));
    std::vector<Vertex> targets;
    bool skipped_parent = parent[vi] < 0;
    for (Vertex w : codomain.neighbors(f[vi])) {
      if (!skipped_parent && w == f[static_cast<std::size_t>(parent[vi])]) {
        skipped_parent = true;
        continue;
      }
      targets.push_back(w);
    }
    std::size_t next = 0;
    for (Vertex c : t.neighbors(v)) {
      if (c == parent[vi]) continue;
      parent[static_cast<std::size_t>(c)] = v;
      f[static_cast<std::size_t>(c)] = targets.at(next++);
      queue.push_back(c);
    }
  }
  return f;
}

bool quotient_handshake_check(const Graph& g, std::int64_t p) {
  require_prime(p, "quotient_handshake_check");
  const StructureReport st = analyze_structure(g);
  if (!st.biregular) return false;
  return quotient_handshake_check(*st.biregular, g.edge_count(), p);
}

}  // namespace rbg
