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

namespace rbg {

/// K_{a,b}: vertices 0..a-1 on side 0, a..a+b-1 on side 1.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// C_n, n >= 3.
Graph cycle(std::size_t n);
/// K_n.
Graph complete(std::size_t n);

/// Gale-Ryser: is there a simple bipartite graph with these side degrees?
bool gale_ryser_feasible(std::vector<std::size_t> left, std::vector<std::size_t> right);

struct RandomBiregularOptions {
  std::size_t max_restarts = 64;
  /// Switch attempts per restart, as a multiple of the edge count.
  std::size_t switches_per_edge = 64;
};

/// Random simple bipartite graph with n1 vertices of degree l (side 0,
/// vertices 0..n1-1) and n2 vertices of degree m (side 1).
///
/// Configuration-model pairing of stubs, after which multi-edges are removed
/// by degree-preserving double-edge switches; a pairing that cannot be
/// repaired is discarded and redrawn. Deterministic for a fixed seed.
/// Throws PreconditionError for infeasible parameters and when every
/// restart fails.
Graph random_biregular(std::size_t n1, std::size_t n2, std::size_t l, std::size_t m,
                       std::uint64_t seed, const RandomBiregularOptions& options = {});

}  // namespace rbg
