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
#include "rbg/structure.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace rbg {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Bigraph: return "bigraph";
    case GraphClass::Regular: return "regular";
    case GraphClass::Unclassified: return "unclassified";
  }
  return "?";
}

GraphClass StructureReport::classification() const {
  if (biregular) return GraphClass::Bigraph;
  if (regular) return GraphClass::Regular;
  return GraphClass::Unclassified;
}

namespace {

std::optional<std::vector<int>> two_colour(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  int components = 0;
  const std::vector<int> comp = connected_components(g, &components);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  // Orient every component so that its higher-degree side is side 0.
  std::vector<std::size_t> max_deg0(static_cast<std::size_t>(components), 0);
  std::vector<std::size_t> max_deg1(static_cast<std::size_t>(components), 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto c = static_cast<std::size_t>(comp[v]);
    auto& slot = colour[v] == 0 ? max_deg0[c] : max_deg1[c];
    slot = std::max(slot, g.degree(static_cast<Vertex>(v)));
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto c = static_cast<std::size_t>(comp[v]);
    if (max_deg1[c] > max_deg0[c]) colour[v] = 1 - colour[v];
  }
  return colour;
}

}  // namespace

StructureReport analyze_structure(const Graph& g) {
  StructureReport r;
  const std::size_t n = g.vertex_count();
  r.connected = is_connected(g);
  r.bipartition = g.parts() ? g.parts() : two_colour(g);

  std::set<std::size_t> degrees;
  for (std::size_t v = 0; v < n; ++v) degrees.insert(g.degree(static_cast<Vertex>(v)));
  if (degrees.size() == 1) r.regular = RegularProfile{*degrees.begin()};

  if (r.bipartition && n > 0) {
    std::set<std::size_t> side[2];
    std::size_t count[2] = {0, 0};
    for (std::size_t v = 0; v < n; ++v) {
      auto s = static_cast<std::size_t>((*r.bipartition)[v]);
      side[s].insert(g.degree(static_cast<Vertex>(v)));
      ++count[s];
    }
    if (side[0].size() == 1 && side[1].size() == 1) {
      std::size_t d0 = *side[0].begin();
      std::size_t d1 = *side[1].begin();
      BiregularProfile p;
      if (d0 >= d1) p = {count[0], count[1], d0, d1};
      else p = {count[1], count[0], d1, d0};
      // Equal degrees: keep n1 <= n2 so the profile is canonical.
      if (p.l == p.m && p.n1 > p.n2) std::swap(p.n1, p.n2);
      if (p.l > 0) r.biregular = p;
    }
  }
  return r;
}

}  // namespace rbg
