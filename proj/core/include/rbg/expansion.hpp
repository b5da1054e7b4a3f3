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
#include <optional>
#include <vector>

#include "rbg/graph.hpp"
#include "rbg/rational.hpp"

namespace rbg {

inline constexpr std::size_t kDefaultExpansionCeiling = 20;

struct ExpansionReport {
  /// min |dW| / |W| over 0 < |W| <= n/2, exact.
  Rational coefficient;
  std::vector<Vertex> minimizing_subset;
  /// Regular graphs only: lambda(X), and 2c next to 1 - lambda/k. The two
  /// are reported side by side; no relation between them is asserted.
  std::optional<double> lambda;
  std::optional<double> one_minus_lambda_over_k;
  std::optional<Rational> twice_coefficient;
};

/// Exhaustive scan over vertex subsets. Throws PreconditionError when
/// n > ceiling or n < 2.
ExpansionReport expansion_coefficient(const Graph& g,
                                      std::size_t ceiling = kDefaultExpansionCeiling);

}  // namespace rbg
