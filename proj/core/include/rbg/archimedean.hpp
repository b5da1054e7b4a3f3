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

#include <array>
#include <complex>

#include "rbg/cyclic_algebra.hpp"

namespace rbg {

using Complex = std::complex<double>;

/// A point of L tensor R = C^3.
using ComplexTriple = std::array<Complex, 3>;

inline constexpr double kDefaultArchimedeanTolerance = 1e-10;

/// The fixed complex embedding zeta_9 -> exp(2 pi i / 9).
Complex complex_embedding(const CycloElem& l);
Complex complex_embedding(const QuadElem& e);

/// l -> (s(l), s(rho l), s(rho^2 l)) for the fixed embedding s.
ComplexTriple realize_at_infinity(const CycloElem& l);

/// Entrywise image of A(l0, l1, l2) under the fixed embedding.
Eigen::Matrix3cd matrix_at_infinity(const GaloisElem& d);

/// rho acts on C^3 by (t0, t1, t2) -> (t1, t2, t0).
ComplexTriple rho_at_infinity(const ComplexTriple& t);
/// tau acts by (t0, t1, t2) -> (conj t0, conj t2, conj t1).
ComplexTriple tau_at_infinity(const ComplexTriple& t);

/// M^* M = I and det M = 1, both within tol (max-abs entrywise).
bool is_complex_special_unitary(const Eigen::Matrix3cd& m,
                                double tol = kDefaultArchimedeanTolerance);

/// For a diagonal element x of L_inf with alpha = tau: checks the norm
/// t0 t1 t2 = 1 and tau(x) x = (1, 1, 1) within relative tolerance.
bool is_torus_unitary(const ComplexTriple& x, double tol = kDefaultArchimedeanTolerance);

/// (conj(t)/t, t, 1/conj(t)): the candidate split-torus element.
ComplexTriple torus_element(Complex t);

/// is_torus_unitary(torus_element(t)). Throws PreconditionError on t = 0.
bool verify_noncompact_torus(Complex t, double tol = kDefaultArchimedeanTolerance);

}  // namespace rbg
