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
#include "rbg/expansion.hpp"

#include <bit>
#include <cstdint>

#include "rbg/errors.hpp"
#include "rbg/spectrum.hpp"
#include "rbg/structure.hpp"

namespace rbg {

ExpansionReport expansion_coefficient(const Graph& g, std::size_t ceiling) {
  const std::size_t n = g.vertex_count();
  if (n > ceiling)
    throw PreconditionError("expansion brute force limited to n <= " + std::to_string(ceiling) +
                            " (got " + std::to_string(n) + "); use the spectral report instead");
  if (n > 30) throw PreconditionError("expansion brute force supports at most 30 vertices");
  if (n < 2) throw PreconditionError("expansion coefficient needs at least 2 vertices");

  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& [u, v] : g.edges()) {
    nbr[static_cast<std::size_t>(u)] |= 1U << v;
    nbr[static_cast<std::size_t>(v)] |= 1U << u;
  }

  // Track the best ratio as an integer pair to avoid rational arithmetic in
  // the inner loop.
  std::uint64_t best_num = 0, best_den = 0;
  std::uint32_t best_set = 0;
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1U);
  for (std::uint32_t w = 1; w <= full && w != 0; ++w) {
    const auto size = static_cast<std::uint64_t>(std::popcount(w));
    if (2 * size > n) continue;
    std::uint32_t reach = 0;
    for (std::uint32_t rest = w; rest != 0; rest &= rest - 1)
      reach |= nbr[static_cast<std::size_t>(std::countr_zero(rest))];
    const auto boundary = static_cast<std::uint64_t>(std::popcount(reach & ~w));
    if (best_den == 0 || boundary * best_den < best_num * size) {
      best_num = boundary;
      best_den = size;
      best_set = w;
    }
  }

  ExpansionReport r;
  r.coefficient = Rational(static_cast<unsigned long>(best_num), static_cast<unsigned long>(best_den));
  r.coefficient.canonicalize();
  for (std::size_t v = 0; v < n; ++v)
    if (best_set & (1U << v)) r.minimizing_subset.push_back(static_cast<Vertex>(v));

  const StructureReport st = analyze_structure(g);
  if (st.regular && st.connected && st.regular->k > 0) {
    const Spectrum s = spectrum(g);
    const bool bipartite = st.bipartition.has_value();
    const double lam = lambda_of(s, *st.regular, bipartite);
    r.lambda = lam;
    r.one_minus_lambda_over_k = 1.0 - lam / static_cast<double>(st.regular->k);
    r.twice_coefficient = 2 * r.coefficient;
  }
  return r;
}

}  // namespace rbg
