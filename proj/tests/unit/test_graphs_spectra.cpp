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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "rbg/errors.hpp"
#include "rbg/expansion.hpp"
#include "rbg/generators.hpp"
#include "rbg/graph_io.hpp"
#include "rbg/spectrum.hpp"
#include "rbg/structure.hpp"

using namespace rbg;

namespace {

// Power sums tr(A^k) by exact integer walk counting.
std::vector<long long> closed_walks(const Graph& g, int kmax) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0)), p = a;
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  std::vector<long long> out;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::vector<long long>> q(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (p[i][l])
          for (std::size_t j = 0; j < n; ++j) q[i][j] += p[i][l] * a[l][j];
    p = q;
    long long tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += p[i][i];
    out.push_back(tr);
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, e);
}

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

Graph disjoint_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}}, std::vector<int>{0, 0, 1}), std::invalid_argument);
  const Graph g(3, {{1, 2}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("structure analysis") {
  const StructureReport k33 = analyze_structure(complete_bipartite(3, 3));
  CHECK(k33.connected);
  CHECK(k33.bipartition.has_value());
  REQUIRE(k33.regular.has_value());
  CHECK(k33.regular->k == 3);
  CHECK(k33.classification() == GraphClass::Bigraph);

  const StructureReport c6 = analyze_structure(cycle(6));
  CHECK(c6.connected);
  CHECK(c6.bipartition.has_value());
  CHECK(c6.regular->k == 2);

  const StructureReport star = analyze_structure(complete_bipartite(1, 3));
  REQUIRE(star.biregular.has_value());
  CHECK(star.biregular->n1 == 1);
  CHECK(star.biregular->n2 == 3);
  CHECK(star.biregular->l == 3);
  CHECK(star.biregular->m == 1);
  CHECK(star.biregular->handshake_holds(3));

  const StructureReport k4 = analyze_structure(complete(4));
  CHECK_FALSE(k4.bipartition.has_value());
  CHECK(k4.classification() == GraphClass::Regular);
  CHECK_FALSE(analyze_structure(disjoint_edges()).connected);
  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK(analyze_structure(path).classification() == GraphClass::Bigraph);
  const Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(analyze_structure(paw).classification() == GraphClass::Unclassified);
}

TEST_CASE("spectra of small graphs") {
  const Spectrum k33 = spectrum(complete_bipartite(3, 3));
  const std::vector<double> expect{3, 0, 0, 0, 0, -3};
  REQUIRE(k33.values.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(near(k33.values[i], expect[i]));
  const Spectrum k2 = spectrum(complete_bipartite(1, 1));
  CHECK(near(k2.values[0], 1));
  CHECK(near(k2.values[1], -1));
  const Spectrum k23 = spectrum(complete_bipartite(2, 3));
  CHECK(near(k23.values.front(), std::sqrt(6.0)));
  CHECK(near(k23.values.back(), -std::sqrt(6.0)));
  CHECK(k23.count_zeros() == 3);

  for (std::size_t n = 3; n <= 16; ++n) {
    std::vector<double> oracle;
    for (std::size_t j = 0; j < n; ++j) oracle.push_back(2 * std::cos(2 * std::numbers::pi * double(j) / double(n)));
    std::sort(oracle.rbegin(), oracle.rend());
    const Spectrum s = spectrum(cycle(n));
    for (std::size_t i = 0; i < n; ++i) CHECK(near(s.values[i], oracle[i]));
  }
}

TEST_CASE("spectra agree with exact closed-walk counts") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 10);
    const Graph g = random_graph(rng, n, 0.4);
    const Spectrum s = spectrum(g);
    const auto walks = closed_walks(g, static_cast<int>(n));
    for (std::size_t k = 1; k <= n; ++k) {
      double sum = 0;
      for (double v : s.values) sum += std::pow(v, double(k));
      CHECK(std::abs(sum - double(walks[k - 1])) <= 1e-7 * std::max(1.0, double(walks[k - 1])));
    }
  }
}

TEST_CASE("lambda and bounds") {
  const auto k33 = complete_bipartite(3, 3);
  CHECK(near(lambda_of(spectrum(k33), RegularProfile{3}, true), 0));
  CHECK(near(lambda_of(spectrum(cycle(6)), RegularProfile{2}, true), 1));
  const auto k23 = complete_bipartite(2, 3);
  CHECK(near(lambda_of(spectrum(k23), *analyze_structure(k23).biregular), 0));
  CHECK_THROWS_AS(lambda_of(spectrum(disjoint_edges()), RegularProfile{1}, true), PreconditionError);

  CHECK(near(bound_values(9, 3).feng_li, 3 * std::sqrt(2.0)));
  CHECK(near(*bound_values(3, 3).alon_boppana, 2 * std::sqrt(2.0)));
  CHECK(near(*bound_values(2, 2).alon_boppana, 2));
  CHECK_FALSE(bound_values(9, 3).alon_boppana.has_value());
  for (std::size_t k = 2; k < 10; ++k) CHECK(near(bound_values(k, k).feng_li, *bound_values(k, k).alon_boppana));
}

TEST_CASE("Ramanujan certificates") {
  const auto k44 = certify_ramanujan(complete_bipartite(4, 4));
  CHECK(k44.ramanujan);
  CHECK(near(k44.lambda, 0));
  CHECK(near(k44.lower_bound, 0));
  CHECK(near(k44.upper_bound, 2 * std::sqrt(3.0)));
  CHECK(k44.definitions_agree);
  REQUIRE(k44.regular_definition.has_value());
  CHECK(k44.regular_definition->passed);

  const auto k23 = certify_ramanujan(complete_bipartite(2, 3));
  CHECK_FALSE(k23.ramanujan);
  CHECK(near(k23.lower_bound, std::sqrt(2.0) - 1));
  CHECK_FALSE(k23.feng_li_window->passed);
  CHECK(k23.feng_li_window->margin < 0);
  CHECK(k23.definitions_agree);

  const auto c6 = certify_ramanujan(cycle(6));
  CHECK(c6.ramanujan);
  CHECK(near(c6.lambda, 1));
  REQUIRE(c6.regular_definition.has_value());
  CHECK(c6.regular_definition->passed);

  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const auto pc = certify_ramanujan(petersen);
  CHECK(pc.graph_class == GraphClass::Regular);
  CHECK(near(pc.lambda, 2));
  CHECK(pc.ramanujan);
  CHECK_FALSE(pc.feng_li_window.has_value());

  CHECK_THROWS_AS(certify_ramanujan(disjoint_edges()), PreconditionError);
  const Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK_THROWS_AS(certify_ramanujan(paw), PreconditionError);
}

TEST_CASE("zero eigenvalues of bigraphs") {
  // At least |n2 - n1| zeros always; equality can fail.
  const Spectrum k33 = spectrum(complete_bipartite(3, 3));
  CHECK(k33.count_zeros() == 4);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n1 = 4 + static_cast<std::size_t>(i % 5), l = 3, m = n1 % 2 == 0 ? 2 : 3;
    if ((n1 * l) % m != 0) continue;
    const std::size_t n2 = n1 * l / m;
    const Graph g = random_biregular(n1, n2, l, m, rng());
    const Spectrum s = spectrum(g);
    CHECK(s.count_zeros() >= (n2 > n1 ? n2 - n1 : n1 - n2));
  }
}

TEST_CASE("expansion coefficient") {
  const auto k4 = expansion_coefficient(complete(4));
  // |W| = 1 gives 3, |W| = 2 gives 2/2.
  CHECK(k4.coefficient == 1);
  CHECK(k4.lambda.has_value());
  CHECK(expansion_coefficient(complete_bipartite(1, 1)).coefficient == 1);
  CHECK(expansion_coefficient(disjoint_edges()).coefficient == 0);
  const auto c6 = expansion_coefficient(cycle(6));
  CHECK(c6.coefficient == Rational(2, 3));
  REQUIRE(c6.twice_coefficient.has_value());
  CHECK(*c6.twice_coefficient == Rational(4, 3));
  CHECK_THROWS_AS(expansion_coefficient(cycle(21)), PreconditionError);
  CHECK_NOTHROW(expansion_coefficient(cycle(21), 21));
  CHECK_THROWS_AS(expansion_coefficient(Graph(1, {})), PreconditionError);

  // Independent brute force on random graphs.
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + static_cast<std::size_t>(t % 6);
    const Graph g = random_graph(rng, n, 0.5);
    Rational best = -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      const unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
      if (2 * size > n) continue;
      unsigned boundary = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1u) continue;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
          if (mask >> w & 1u) {
            ++boundary;
            break;
          }
      }
      Rational r(boundary, size);
      r.canonicalize();
      if (best < 0 || r < best) best = r;
    }
    CHECK(expansion_coefficient(g).coefficient == best);
  }
}

TEST_CASE("generators") {
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  const Graph c6 = cycle(6);
  CHECK(c6.edge_count() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
  CHECK(complete(5).edge_count() == 10);

  const Graph g = random_biregular(3, 9, 9, 3, 5);
  CHECK(g.edge_count() == 27);
  const Graph h = random_biregular(12, 36, 9, 3, 77);
  CHECK(h.edge_count() == 108);
  CHECK(graph_to_json(h) == graph_to_json(random_biregular(12, 36, 9, 3, 77)));
  for (Vertex v = 0; v < 12; ++v) CHECK(h.degree(v) == 9);
  for (Vertex v = 12; v < 48; ++v) CHECK(h.degree(v) == 3);
  CHECK_THROWS_AS(random_biregular(3, 4, 3, 3, 1), PreconditionError);
  CHECK_THROWS_AS(random_biregular(4, 2, 3, 6, 1), PreconditionError);

  CHECK(gale_ryser_feasible({2, 2}, {1, 1, 1, 1}));
  CHECK_FALSE(gale_ryser_feasible({3, 1}, {2, 2}));
  CHECK_FALSE(gale_ryser_feasible({1}, {1, 1}));
}

TEST_CASE("graph files") {
  const Graph g = complete_bipartite(2, 3);
  const Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.edges() == g.edges());
  CHECK(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 1]], "parts": [0, 1]})"))
            .parts()
            .has_value());
  for (const char* bad : {R"([])", R"({"edges": []})", R"({"n": 2})", R"({"n": -1, "edges": []})",
                          R"({"n": 2, "edges": [[0, 2]]})", R"({"n": 2, "edges": [[0, 0]]})",
                          R"({"n": 2, "edges": [[0, 1], [1, 0]]})", R"({"n": 2, "edges": [[0]]})",
                          R"({"n": 2, "edges": [], "colour": 1})",
                          R"({"n": 2, "edges": [[0, 1]], "parts": [0, 0]})",
                          R"({"n": 2, "edges": [[0, 1]], "parts": [0, 2]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(bad)), ParseError);
  }
  const std::string dot = to_dot(cycle(4), "C4");
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
}
