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
#include "rbg/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "rbg/errors.hpp"

namespace rbg {

std::size_t Spectrum::count_zeros() const {
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [&](double v) { return std::abs(v) <= tolerance; }));
}

bool Spectrum::is_symmetric() const {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(values[i] + values[n - 1 - i]) > tolerance) return false;
  return true;
}

bool Spectrum::contains(double x) const {
  return std::any_of(values.begin(), values.end(),
                     [&](double v) { return std::abs(v - x) <= tolerance; });
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Spectrum spectrum(const Graph& g, double tolerance) {
  if (g.vertex_count() == 0) throw PreconditionError("spectrum of the empty graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver failed");
  Spectrum s;
  s.tolerance = tolerance;
  s.values.assign(solver.eigenvalues().data(),
                  solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

double lambda_of(const Spectrum& s, const RegularProfile& profile, bool bipartite) {
  const auto& v = s.values;
  const std::size_t n = v.size();
  const double k = static_cast<double>(profile.k);
  const double tol = s.tolerance;
  if (n == 0) throw PreconditionError("empty spectrum");
  if (std::abs(v.front() - k) > tol)
    throw PreconditionError("top eigenvalue " + fmt(v.front()) + " differs from degree " + fmt(k));
  if (n > 1 && v[1] >= k - tol)
    throw PreconditionError("eigenvalue k has multiplicity > 1: graph is disconnected");
  const bool has_minus_k = std::abs(v.back() + k) <= tol;
  if (has_minus_k != bipartite)
    throw PreconditionError(bipartite ? "bipartite regular graph without eigenvalue -k"
                                      : "non-bipartite connected graph with eigenvalue -k");
  std::size_t last = bipartite ? n - 1 : n;
  if (bipartite && n > 2 && v[n - 2] <= -k + tol)
    throw PreconditionError("eigenvalue -k has multiplicity > 1: graph is disconnected");
  double lambda = 0.0;
  for (std::size_t i = 1; i < last; ++i) lambda = std::max(lambda, std::abs(v[i]));
  return lambda;
}

double lambda_of(const Spectrum& s, const BiregularProfile& p) {
  const auto& v = s.values;
  const std::size_t n = v.size();
  const double tol = s.tolerance;
  if (n != p.n1 + p.n2)
    throw PreconditionError("spectrum size " + std::to_string(n) + " does not match profile");
  const double top = std::sqrt(static_cast<double>(p.l * p.m));
  if (std::abs(v.front() - top) > tol || std::abs(v.back() + top) > tol)
    throw PreconditionError("extreme eigenvalues " + fmt(v.front()) + ", " + fmt(v.back()) +
                            " differ from +/-sqrt(lm) = " + fmt(top));
  if (n > 2 && (v[1] >= top - tol || v[n - 2] <= -top + tol))
    throw PreconditionError("+/-sqrt(lm) has multiplicity > 1: graph is disconnected");
  if (!s.is_symmetric()) throw PreconditionError("bigraph spectrum is not symmetric about 0");
  if (s.count_zeros() < p.n2 - p.n1)
    throw PreconditionError("bigraph spectrum has fewer than n2 - n1 = " +
                            std::to_string(p.n2 - p.n1) + " zero eigenvalues");
  double lambda = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) lambda = std::max(lambda, std::abs(v[i]));
  return lambda;
}

Bounds bound_values(std::size_t l, std::size_t m) {
  if (l < 1 || m < 1) throw PreconditionError("degrees must be at least 1");
  Bounds b;
  b.feng_li = std::sqrt(static_cast<double>(l - 1)) + std::sqrt(static_cast<double>(m - 1));
  if (l == m) b.alon_boppana = 2.0 * std::sqrt(static_cast<double>(l - 1));
  return b;
}

RamanujanCertificate certify_ramanujan(const Graph& g, double tolerance) {
  if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
  const StructureReport st = analyze_structure(g);
  if (!st.connected) throw PreconditionError("graph is disconnected");

  RamanujanCertificate c;
  c.tolerance = tolerance;
  c.graph_class = st.classification();
  c.spectrum = spectrum(g, tolerance);

  if (c.graph_class == GraphClass::Unclassified)
    throw PreconditionError("graph is neither regular nor a biregular bipartite graph");

  if (c.graph_class == GraphClass::Bigraph) {
    const BiregularProfile& p = *st.biregular;
    c.profile = p;
    c.lambda = lambda_of(c.spectrum, p);
    const double sl = std::sqrt(static_cast<double>(p.l - 1));
    const double sm = std::sqrt(static_cast<double>(p.m - 1));
    c.lower_bound = std::abs(sl - sm);
    c.upper_bound = sl + sm;
    const double lam = c.lambda;

    DefinitionVerdict window;
    window.margin = std::min(lam - c.lower_bound, c.upper_bound - lam);
    window.passed = window.margin >= -tolerance;
    c.feng_li_window = window;

    // Same test after squaring; the tolerance is carried through the square
    // so that both forms decide identically away from rounding noise.
    const double q1 = static_cast<double>(p.l - 1);
    const double q2 = static_cast<double>(p.m - 1);
    DefinitionVerdict squared;
    squared.margin = 2.0 * std::sqrt(q1 * q2) - std::abs(lam * lam - q1 - q2);
    squared.passed = squared.margin >= -tolerance * (2.0 * c.upper_bound + tolerance);
    c.hashimoto_form = squared;

    c.definitions_agree = window.passed == squared.passed;
    c.ramanujan = window.passed;
    if (p.l == p.m) {
      c.k = p.l;
      DefinitionVerdict reg;
      reg.margin = 2.0 * sl - lam;
      reg.passed = reg.margin >= -tolerance;
      c.regular_definition = reg;
    }
  } else {
    const RegularProfile& r = *st.regular;
    c.k = r.k;
    c.lambda = lambda_of(c.spectrum, r, st.bipartition.has_value());
    c.lower_bound = 0.0;
    c.upper_bound = 2.0 * std::sqrt(static_cast<double>(r.k - 1));
    DefinitionVerdict reg;
    reg.margin = c.upper_bound - c.lambda;
    reg.passed = reg.margin >= -tolerance;
    c.regular_definition = reg;
    c.ramanujan = reg.passed;
  }
  return c;
}

}  // namespace rbg
