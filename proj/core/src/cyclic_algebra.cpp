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
#include "rbg/cyclic_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "rbg/errors.hpp"

namespace rbg {

std::string to_string(AlgebraKind k) {
  return k == AlgebraKind::GaloisC6 ? "galois" : "nongalois";
}

bool galois_actions_commute() {
  for (int i = 0; i < CycloElem::kDegree; ++i) {
    const CycloElem basis = CycloElem::zeta_power(i);
    if (!(galois_tau(galois_rho(basis)) == galois_rho(galois_tau(basis)))) return false;
  }
  return true;
}

AlgebraParams AlgebraParams::galois(QuadElem a) {
  if (a.is_zero()) throw PreconditionError("structure constant a must be nonzero");
  if (!galois_actions_commute())
    throw PreconditionError("tau and rho do not commute on Q(zeta_9)");
  return {AlgebraKind::GaloisC6, std::move(a), std::nullopt};
}

AlgebraParams AlgebraParams::non_galois(QuadElem b) {
  QuadElem a = b.conj();
  return non_galois(std::move(a), std::move(b));
}

AlgebraParams AlgebraParams::non_galois(QuadElem a, QuadElem b) {
  if (b.is_zero()) throw PreconditionError("theta^3 = b must be nonzero");
  if (!(a == b.conj())) throw PreconditionError("non-Galois kind requires a = tau(b)");
  if (cube_root_in_E(b))
    throw PreconditionError("b = " + b.str() + " is a cube in E; E(theta) is not a field");
  return {AlgebraKind::NonGalois, std::move(a), std::move(b)};
}

AlgebraParams AlgebraParams::default_galois() {
  const QuadElem s = QuadElem::sqrt_minus3();
  return galois((QuadElem(2) + s) / (QuadElem(2) - s));
}

AlgebraParams AlgebraParams::default_non_galois() {
  return non_galois(QuadElem(2) * QuadElem::zeta3());
}

QuadElem FieldTraits<CubicExtElem>::as_E(const CubicExtElem& l) {
  if (!l.is_scalar()) throw ConsistencyError("element of E(theta) is not in E: " + l.str());
  return l[0];
}

template <class L>
Matrix3<L> operator*(const Matrix3<L>& x, const Matrix3<L>& y) {
  Matrix3<L> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      L acc = x[i][0] * y[0][j];
      acc += x[i][1] * y[1][j];
      acc += x[i][2] * y[2][j];
      r[i][j] = std::move(acc);
    }
  return r;
}

template <class L>
L determinant(const Matrix3<L>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class L>
AlgebraElem<L>::AlgebraElem(AlgebraParams params, L l0, L l1, L l2)
    : params_(std::move(params)), l_{std::move(l0), std::move(l1), std::move(l2)} {
  if (params_.kind() != FieldTraits<L>::kind)
    throw std::invalid_argument("algebra params of kind " + to_string(params_.kind()) +
                                " used with the wrong coefficient field");
}

template <class L>
AlgebraElem<L> AlgebraElem<L>::zero(const AlgebraParams& p) {
  L z0 = FieldTraits<L>::scalar(QuadElem(0), p);
  return {p, z0, z0, z0};
}

template <class L>
AlgebraElem<L> AlgebraElem<L>::one(const AlgebraParams& p) {
  return scalar(p, QuadElem(1));
}

template <class L>
AlgebraElem<L> AlgebraElem<L>::z(const AlgebraParams& p) {
  L z0 = FieldTraits<L>::scalar(QuadElem(0), p);
  return {p, z0, FieldTraits<L>::scalar(QuadElem(1), p), z0};
}

template <class L>
AlgebraElem<L> AlgebraElem<L>::scalar(const AlgebraParams& p, const QuadElem& e) {
  return from_L(p, FieldTraits<L>::scalar(e, p));
}

template <class L>
AlgebraElem<L> AlgebraElem<L>::from_L(const AlgebraParams& p, L l) {
  L z0 = FieldTraits<L>::scalar(QuadElem(0), p);
  return {p, std::move(l), z0, z0};
}

template <class L>
bool AlgebraElem<L>::is_zero() const {
  return l_[0].is_zero() && l_[1].is_zero() && l_[2].is_zero();
}

template <class L>
void AlgebraElem<L>::require_same(const AlgebraElem& o) const {
  if (!(params_ == o.params_))
    throw std::invalid_argument("algebra elements with different structure constants");
}

template <class L>
AlgebraElem<L> AlgebraElem<L>::operator-() const {
  return {params_, -l_[0], -l_[1], -l_[2]};
}

template <class L>
AlgebraElem<L>& AlgebraElem<L>::operator+=(const AlgebraElem& o) {
  require_same(o);
  for (std::size_t i = 0; i < 3; ++i) l_[i] += o.l_[i];
  return *this;
}

template <class L>
AlgebraElem<L>& AlgebraElem<L>::operator-=(const AlgebraElem& o) {
  require_same(o);
  for (std::size_t i = 0; i < 3; ++i) l_[i] -= o.l_[i];
  return *this;
}

template <class L>
AlgebraElem<L> algebra_mul(const AlgebraElem<L>& d, const AlgebraElem<L>& e) {
  d.require_same(e);
  const AlgebraParams& p = d.params();
  const L a = FieldTraits<L>::scalar(p.a(), p);
  std::array<L, 3> out;
  for (auto& o : out) o = FieldTraits<L>::scalar(QuadElem(0), p);
  // (l_i z^i)(m_j z^j) = l_i rho^i(m_j) z^{i+j}.
  for (int j = 0; j < 3; ++j) {
    L twisted = e[j];
    for (int i = 0; i < 3; ++i) {
      if (!d[i].is_zero() && !twisted.is_zero()) {
        L term = d[i] * twisted;
        if (i + j >= 3) term = a * term;
        out[static_cast<std::size_t>((i + j) % 3)] += term;
      }
      twisted = rho(twisted);
    }
  }
  return {p, std::move(out[0]), std::move(out[1]), std::move(out[2])};
}

template <class L>
Matrix3<L> AlgebraElem<L>::to_matrix() const {
  const L a = FieldTraits<L>::scalar(params_.a(), params_);
  const L r0 = rho(l_[0]), r1 = rho(l_[1]), r2 = rho(l_[2]);
  const L s0 = rho(r0), s1 = rho(r1), s2 = rho(r2);
  return {{{l_[0], l_[1], l_[2]}, {a * r2, r0, r1}, {a * s1, a * s2, s0}}};
}

template <class L>
AlgebraElem<L> AlgebraElem<L>::inverse() const {
  const Matrix3<L> m = to_matrix();
  const QuadElem n = reduced_norm(*this);
  if (n.is_zero()) throw std::domain_error("element has reduced norm zero: not invertible");
  // First row of adj(A) / det(A) is the coordinate vector of d^{-1}.
  const L inv_det = FieldTraits<L>::scalar(n.inverse(), params_);
  L c0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  L c1 = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  L c2 = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  AlgebraElem inv{params_, inv_det * c0, inv_det * c1, inv_det * c2};
  if (!(algebra_mul(*this, inv) == one(params_)))
    throw ConsistencyError("adjugate inverse failed to invert " + str());
  return inv;
}

template <class L>
std::string AlgebraElem<L>::str() const {
  std::ostringstream os;
  os << "[" << l_[0] << "] + [" << l_[1] << "] z + [" << l_[2] << "] z^2";
  return os.str();
}

template <class L>
QuadElem reduced_norm(const AlgebraElem<L>& d) {
  const QuadElem& a = d.params().a();
  const L r1 = rho(d[1]);
  const L r2 = rho(rho(d[2]));
  QuadElem n = norm_L_over_E(d[0]) + a * norm_L_over_E(d[1]) + a * a * norm_L_over_E(d[2]) -
               a * trace_L_over_E(d[0] * r1 * r2);
  return n;
}

template <class L>
QuadElem matrix_determinant_norm(const AlgebraElem<L>& d) {
  return FieldTraits<L>::as_E(determinant(d.to_matrix()));
}

GaloisElem involution(const GaloisElem& d) {
  const AlgebraParams& p = d.params();
  const CycloElem ta = embed_E_in_L(p.a().conj());
  const CycloElem rho_l2 = galois_rho(d[2]);
  const CycloElem rho2_l1 = galois_rho(galois_rho(d[1]));
  return {p, galois_tau(d[0]), ta * galois_tau(rho_l2), ta * galois_tau(rho2_l1)};
}

NonGaloisElem involution(const NonGaloisElem& d) {
  const AlgebraParams& p = d.params();
  const QuadElem& b = *p.b();
  std::array<CubicExtElem::Coeffs, 3> out;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j)
      out[k][j] = d[static_cast<int>(j)][static_cast<int>(k)].conj();
  return {p, CubicExtElem(b, out[0]), CubicExtElem(b, out[1]), CubicExtElem(b, out[2])};
}

template <class L>
bool is_special_unitary(const AlgebraElem<L>& d) {
  if (!(reduced_norm(d) == QuadElem(1))) return false;
  return algebra_mul(involution(d), d) == AlgebraElem<L>::one(d.params());
}

QuadElem random_quad(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  long x = dist(rng);
  long y = dist(rng);
  return {Rational(x), Rational(y)};
}

CycloElem random_cyclo(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  CycloElem::Coeffs c;
  for (auto& v : c) v = dist(rng);
  return CycloElem(c);
}

GaloisElem random_galois_elem(const AlgebraParams& p, std::mt19937_64& rng, int bound) {
  CycloElem l0 = random_cyclo(rng, bound);
  CycloElem l1 = random_cyclo(rng, bound);
  CycloElem l2 = random_cyclo(rng, bound);
  return {p, l0, l1, l2};
}

NonGaloisElem random_non_galois_elem(const AlgebraParams& p, std::mt19937_64& rng, int bound) {
  const QuadElem& b = *p.b();
  std::array<CubicExtElem, 3> l;
  for (auto& li : l) {
    CubicExtElem::Coeffs c;
    for (auto& e : c) e = random_quad(rng, bound);
    li = CubicExtElem(b, c);
  }
  return {p, l[0], l[1], l[2]};
}

GaloisElem random_special_unitary(const AlgebraParams& p, std::mt19937_64& rng, int bound) {
  const GaloisElem one = GaloisElem::one(p);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const GaloisElem x = random_galois_elem(p, rng, bound);
    const GaloisElem h = x - involution(x);
    const GaloisElem plus = one + h;
    const QuadElem u = reduced_norm(plus);
    if (u.is_zero()) continue;
    const GaloisElem cayley = algebra_mul(plus.inverse(), one - h);
    const GaloisElem cube = algebra_mul(algebra_mul(cayley, cayley), cayley);
    GaloisElem s = algebra_mul(GaloisElem::scalar(p, u / u.conj()), cube);
    if (!is_special_unitary(s))
      throw ConsistencyError("Cayley construction produced a non-unitary element");
    return s;
  }
  throw ConsistencyError("could not find an invertible 1 + h for the Cayley transform");
}

template class AlgebraElem<CycloElem>;
template class AlgebraElem<CubicExtElem>;
template AlgebraElem<CycloElem> algebra_mul(const AlgebraElem<CycloElem>&,
                                            const AlgebraElem<CycloElem>&);
template AlgebraElem<CubicExtElem> algebra_mul(const AlgebraElem<CubicExtElem>&,
                                               const AlgebraElem<CubicExtElem>&);
template QuadElem reduced_norm(const AlgebraElem<CycloElem>&);
template QuadElem reduced_norm(const AlgebraElem<CubicExtElem>&);
template QuadElem matrix_determinant_norm(const AlgebraElem<CycloElem>&);
template QuadElem matrix_determinant_norm(const AlgebraElem<CubicExtElem>&);
template bool is_special_unitary(const AlgebraElem<CycloElem>&);
template bool is_special_unitary(const AlgebraElem<CubicExtElem>&);
template Matrix3<CycloElem> operator*(const Matrix3<CycloElem>&, const Matrix3<CycloElem>&);
template Matrix3<CubicExtElem> operator*(const Matrix3<CubicExtElem>&,
                                         const Matrix3<CubicExtElem>&);
template CycloElem determinant(const Matrix3<CycloElem>&);
template CubicExtElem determinant(const Matrix3<CubicExtElem>&);

}  // namespace rbg
