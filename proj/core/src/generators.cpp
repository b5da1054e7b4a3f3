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
#include "rbg/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

#include "rbg/errors.hpp"

namespace rbg {

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  std::vector<int> parts(a + b, 1);
  std::fill(parts.begin(), parts.begin() + static_cast<long>(a), 0);
  return Graph(a + b, std::move(edges), std::move(parts));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, std::move(edges));
}

bool gale_ryser_feasible(std::vector<std::size_t> left, std::vector<std::size_t> right) {
  const std::size_t sl = std::accumulate(left.begin(), left.end(), std::size_t{0});
  const std::size_t sr = std::accumulate(right.begin(), right.end(), std::size_t{0});
  if (sl != sr) return false;
  std::sort(left.begin(), left.end(), std::greater<>());
  std::size_t prefix = 0;
  for (std::size_t k = 1; k <= left.size(); ++k) {
    prefix += left[k - 1];
    std::size_t cap = 0;
    for (std::size_t d : right) cap += std::min(d, k);
    if (prefix > cap) return false;
  }
  return true;
}

Graph random_biregular(std::size_t n1, std::size_t n2, std::size_t l, std::size_t m,
                       std::uint64_t seed, const RandomBiregularOptions& options) {
  if (n1 == 0 || n2 == 0 || l == 0 || m == 0)
    throw PreconditionError("random_biregular: counts and degrees must be positive");
  if (n1 * l != n2 * m)
    throw PreconditionError("random_biregular: handshake fails, n1*l = " + std::to_string(n1 * l) +
                            " but n2*m = " + std::to_string(n2 * m));
  if (!gale_ryser_feasible(std::vector<std::size_t>(n1, l), std::vector<std::size_t>(n2, m)))
    throw PreconditionError("random_biregular: no simple bipartite graph has these degrees");

  const std::size_t edge_total = n1 * l;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> right_stubs;
  right_stubs.reserve(edge_total);
  for (std::size_t b = 0; b < n2; ++b) right_stubs.insert(right_stubs.end(), m, b);

  for (std::size_t restart = 0; restart < options.max_restarts; ++restart) {
    std::shuffle(right_stubs.begin(), right_stubs.end(), rng);
    // Edge i joins left vertex i / l with right vertex right_stubs[i].
    std::vector<std::pair<std::size_t, std::size_t>> edges(edge_total);
    std::unordered_map<std::size_t, int> multiplicity;
    const auto key = [n2](std::size_t a, std::size_t b) { return a * n2 + b; };
    for (std::size_t i = 0; i < edge_total; ++i) {
      edges[i] = {i / l, right_stubs[i]};
      ++multiplicity[key(edges[i].first, edges[i].second)];
    }
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < edge_total; ++i)
      if (multiplicity[key(edges[i].first, edges[i].second)] > 1) bad.push_back(i);

    std::uniform_int_distribution<std::size_t> pick(0, edge_total - 1);
    std::size_t budget = options.switches_per_edge * edge_total;
    while (!bad.empty() && budget-- > 0) {
      const std::size_t i = bad.back();
      auto [a, b] = edges[i];
      if (multiplicity[key(a, b)] <= 1) {
        bad.pop_back();
        continue;
      }
      const std::size_t j = pick(rng);
      auto [c, d] = edges[j];
      if (a == c || b == d) continue;
      if (multiplicity[key(a, d)] > 0 || multiplicity[key(c, b)] > 0) continue;
      // (a,b), (c,d) -> (a,d), (c,b): degrees are preserved.
      --multiplicity[key(a, b)];
      --multiplicity[key(c, d)];
      ++multiplicity[key(a, d)];
      ++multiplicity[key(c, b)];
      edges[i] = {a, d};
      edges[j] = {c, b};
    }
    if (!bad.empty()) continue;

    std::vector<Edge> out;
    out.reserve(edge_total);
    for (const auto& [a, b] : edges)
      out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(n1 + b));
    std::vector<int> parts(n1 + n2, 1);
    std::fill(parts.begin(), parts.begin() + static_cast<long>(n1), 0);
    return Graph(n1 + n2, std::move(out), std::move(parts));
  }
  throw PreconditionError("random_biregular: multi-edge repair failed after " +
                          std::to_string(options.max_restarts) + " restarts");
}

}  // namespace rbg
