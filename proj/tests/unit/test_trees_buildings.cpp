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
#include <doctest.h>

#include <numeric>
#include <random>

#include "rbg/covering.hpp"
#include "rbg/errors.hpp"
#include "rbg/generators.hpp"
#include "rbg/graph_io.hpp"
#include "rbg/spectrum.hpp"
#include "rbg/tree_ball.hpp"

using namespace rbg;

namespace {

// Level sizes by the recurrence: a vertex at level i >= 1 has degree d - 1
// children, alternating between the two sides.
std::vector<std::size_t> oracle_levels(std::size_t l, std::size_t m, std::size_t r, bool root_l) {
  std::vector<std::size_t> out{1};
  for (std::size_t i = 1; i <= r; ++i) {
    const bool parent_is_l = (i % 2 == 1) == root_l;
    const std::size_t d = parent_is_l ? l : m;
    out.push_back(out.back() * (i == 1 ? d : d - 1));
  }
  return out;
}

std::vector<Vertex> identity(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("tree ball level counts") {
  const TreeBall b = biregular_tree_ball(9, 3, 2);
  CHECK(b.level_counts == std::vector<std::size_t>{1, 9, 18});
  CHECK(b.graph.vertex_count() == 28);
  CHECK(biregular_tree_ball(9, 3, 0).graph.vertex_count() == 1);
  CHECK(level_counts_closed_form(9, 3, 3) == std::vector<std::size_t>{1, 9, 18, 144});
  CHECK(biregular_tree_ball(9, 3, 3).level_counts == std::vector<std::size_t>{1, 9, 18, 144});
  CHECK(level_counts_closed_form(5, 5, 2) == std::vector<std::size_t>{1, 5, 20});
  CHECK(level_counts_closed_form(2, 2, 4) == std::vector<std::size_t>{1, 2, 2, 2, 2});
  CHECK(level_counts_closed_form(9, 3, 2, RootSide::DegreeM) == std::vector<std::size_t>{1, 3, 24});
  CHECK_THROWS_AS(biregular_tree_ball(9, 3, 9), CeilingExceeded);
  CHECK_NOTHROW(biregular_tree_ball(9, 3, 8));
  CHECK_THROWS_AS(biregular_tree_ball(1, 3, 2), PreconditionError);

  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::size_t> deg(2, 9), rad(0, 5);
  for (int i = 0; i < 30; ++i) {
    const std::size_t l = deg(rng), m = deg(rng), r = rad(rng);
    const bool root_l = i % 2 == 0;
    const auto side = root_l ? RootSide::DegreeL : RootSide::DegreeM;
    const auto expect = oracle_levels(l, m, r, root_l);
    std::size_t total = 0;
    for (auto c : expect) total += c;
    if (total > kDefaultTreeCeiling) continue;
    const TreeBall t = biregular_tree_ball(l, m, r, side);
    CHECK(t.level_counts == expect);
    CHECK(level_counts_closed_form(l, m, r, side) == expect);
    CHECK(validate_tree_ball(t));
    CHECK(t.graph.edge_count() + 1 == t.graph.vertex_count());
    CHECK(is_connected(t.graph));
    if (t.graph.vertex_count() <= 400) CHECK(spectrum(t.graph).is_symmetric());
    CHECK(check_local_covering(CoveringCandidate::from_tree_ball(t, t.graph, identity(t.graph.vertex_count()))));
  }
}

TEST_CASE("tree balls are reproducible") {
  const TreeBall a = biregular_tree_ball(4, 3, 4), b = biregular_tree_ball(4, 3, 4);
  CHECK(graph_to_json(a.graph).dump() == graph_to_json(b.graph).dump());
}

TEST_CASE("local coverings") {
  const Graph c6 = cycle(6), c3 = cycle(3);
  CHECK(check_local_covering(CoveringCandidate::from_graph(c6, c3, {0, 1, 2, 0, 1, 2})));
  CHECK_FALSE(check_local_covering(CoveringCandidate::from_graph(c6, c3, {0, 1, 0, 1, 0, 1})));
  // A path folding two neighbours of the middle vertex onto one image.
  const Graph path(3, {{0, 1}, {1, 2}});
  const Graph edge(2, {{0, 1}});
  CHECK_FALSE(check_local_covering(CoveringCandidate::from_graph(path, edge, {0, 1, 0})));
  CHECK_THROWS_AS(check_local_covering(CoveringCandidate::from_graph(c6, c3, {0, 1, 2})), std::invalid_argument);

  // A (9,3) ball unfolds onto K_{3,9} and onto a random (9,3) bigraph.
  const TreeBall ball = biregular_tree_ball(9, 3, 4);
  const Graph k39 = complete_bipartite(3, 9);
  CHECK(check_local_covering(CoveringCandidate::from_tree_ball(ball, k39, unfold_tree_ball(ball, k39, 0))));
  const Graph r = random_biregular(6, 18, 9, 3, 3);
  CHECK(check_local_covering(CoveringCandidate::from_tree_ball(ball, r, unfold_tree_ball(ball, r, 2))));
  CHECK_THROWS_AS(unfold_tree_ball(ball, k39, 5), PreconditionError);
  // Treating boundary vertices as interior breaks the covering property.
  CHECK_FALSE(check_local_covering(CoveringCandidate::from_graph(ball.graph, k39, unfold_tree_ball(ball, k39, 0))));
}

TEST_CASE("quotient handshake contract") {
  CHECK_FALSE(quotient_handshake_check(complete_bipartite(2, 2), 2));
  CHECK_FALSE(quotient_handshake_check(complete_bipartite(2, 2), 3));
  CHECK_FALSE(quotient_handshake_check(BiregularProfile{1, 3, 9, 3}, 9, 2));
  CHECK(quotient_handshake_check(BiregularProfile{3, 9, 9, 3}, 27, 2));
  CHECK(quotient_handshake_check(random_biregular(3, 9, 9, 3, 8), 2));
  CHECK(quotient_handshake_check(random_biregular(12, 36, 9, 3, 8), 2));
  CHECK_FALSE(quotient_handshake_check(random_biregular(12, 36, 9, 3, 8), 3));
  CHECK_FALSE(quotient_handshake_check(Graph(4, {{0, 1}, {2, 3}}), 2));
}
