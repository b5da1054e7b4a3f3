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
#include "rbg/archimedean.hpp"

#include <cmath>
#include <numbers>

#include "rbg/errors.hpp"

namespace rbg {

Complex complex_embedding(const CycloElem& l) {
  Complex acc{0.0, 0.0};
  for (int i = 0; i < CycloElem::kDegree; ++i) {
    if (l[i] == 0) continue;
    acc += l[i].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * i / 9.0);
  }
  return acc;
}

Complex complex_embedding(const QuadElem& e) { return complex_embedding(embed_E_in_L(e)); }

ComplexTriple realize_at_infinity(const CycloElem& l) {
  const CycloElem r1 = galois_rho(l);
  return {complex_embedding(l), complex_embedding(r1), complex_embedding(galois_rho(r1))};
}

Eigen::Matrix3cd matrix_at_infinity(const GaloisElem& d) {
  const Matrix3<CycloElem> a = d.to_matrix();
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = complex_embedding(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

ComplexTriple rho_at_infinity(const ComplexTriple& t) { return {t[1], t[2], t[0]}; }

ComplexTriple tau_at_infinity(const ComplexTriple& t) {
  return {std::conj(t[0]), std::conj(t[2]), std::conj(t[1])};
}

bool is_complex_special_unitary(const Eigen::Matrix3cd& m, double tol) {
  const Eigen::Matrix3cd gram = m.adjoint() * m;
  if ((gram - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(m.determinant() - Complex(1.0, 0.0)) <= tol;
}

namespace {

bool near(Complex x, Complex target, double tol) {
  return std::abs(x - target) <= tol * std::max(1.0, std::abs(target));
}

}  // namespace

bool is_torus_unitary(const ComplexTriple& x, double tol) {
  if (!near(x[0] * x[1] * x[2], 1.0, tol)) return false;
  const ComplexTriple tx = tau_at_infinity(x);
  for (int i = 0; i < 3; ++i)
    if (!near(tx[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)], 1.0, tol))
      return false;
  return true;
}

ComplexTriple torus_element(Complex t) {
  if (t == Complex(0.0, 0.0)) throw PreconditionError("torus parameter t must be nonzero");
  return {std::conj(t) / t, t, 1.0 / std::conj(t)};
}

bool verify_noncompact_torus(Complex t, double tol) { return is_torus_unitary(torus_element(t), tol); }

}  // namespace rbg
