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

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rbg/graph.hpp"
#include "rbg/structure.hpp"

namespace rbg {

inline constexpr double kDefaultSpectralTolerance = 1e-9;

/// Adjacency eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> values;
  double tolerance = kDefaultSpectralTolerance;

  std::size_t count_zeros() const;
  /// values[i] + values[n-1-i] within tolerance for all i.
  bool is_symmetric() const;
  bool contains(double x) const;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Dense symmetric eigensolve of the adjacency matrix. Requires n >= 1.
Spectrum spectrum(const Graph& g, double tolerance = kDefaultSpectralTolerance);

/// Largest nontrivial eigenvalue magnitude.
///
/// Regular k: drops k (and -k when bipartite). Bigraph (l, m): drops one
/// +sqrt(lm) and one -sqrt(lm) and validates the +/- pairing and the
/// n2 - n1 forced zeros. Any further eigenvalue at the trivial value means
/// the graph is disconnected. Throws PreconditionError on any mismatch.
double lambda_of(const Spectrum& s, const RegularProfile& profile, bool bipartite);
double lambda_of(const Spectrum& s, const BiregularProfile& profile);

struct Bounds {
  double feng_li = 0.0;
  /// Present when l == m.
  std::optional<double> alon_boppana;
};

/// sqrt(l-1) + sqrt(m-1) and, for l = m = k, 2 sqrt(k-1). Requires l, m >= 1.
Bounds bound_values(std::size_t l, std::size_t m);

struct DefinitionVerdict {
  bool passed = false;
  /// Distance to the nearest bound; negative when violated.
  double margin = 0.0;
};

struct RamanujanCertificate {
  GraphClass graph_class = GraphClass::Unclassified;
  std::size_t k = 0;
  std::optional<BiregularProfile> profile;
  double lambda = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double tolerance = kDefaultSpectralTolerance;
  /// lambda <= 2 sqrt(k - 1); evaluated for regular graphs (including
  /// regular bigraphs).
  std::optional<DefinitionVerdict> regular_definition;
  /// |sqrt(l-1) - sqrt(m-1)| <= lambda <= sqrt(l-1) + sqrt(m-1).
  std::optional<DefinitionVerdict> feng_li_window;
  /// |lambda^2 - q1 - q2| <= 2 sqrt(q1 q2), q_i = degree - 1.
  std::optional<DefinitionVerdict> hashimoto_form;
  bool ramanujan = false;
  /// For bigraphs: the two bigraph verdicts coincide.
  bool definitions_agree = true;
  Spectrum spectrum;
};

/// Throws PreconditionError when the graph is disconnected, edgeless or
/// neither regular nor a bigraph.
RamanujanCertificate certify_ramanujan(const Graph& g,
                                       double tolerance = kDefaultSpectralTolerance);

}  // namespace rbg
