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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "rbg/cubic_extension.hpp"
#include "rbg/cyclotomic.hpp"
#include "rbg/quadratic.hpp"

namespace rbg {

/// Which extension L/E carries the algebra.
///  - GaloisC6: L = Q(zeta_9), Galois over Q with group C6, involution by
///    tau-conjugate transpose.
///  - NonGalois: L = E(theta), theta^3 = b, a = tau(b), involution swapping
///    theta and z.
enum class AlgebraKind { GaloisC6, NonGalois };
std::string to_string(AlgebraKind k);

/// Structure data of D = L + Lz + Lz^2 with z^3 = a and z l = rho(l) z.
class AlgebraParams {
 public:
  /// Checks tau rho = rho tau on the power basis of L; throws
  /// PreconditionError if a is zero or the check fails.
  static AlgebraParams galois(QuadElem a);
  /// a = tau(b). Throws PreconditionError when b is zero or a cube in E
  /// (E(theta) would not be a field).
  static AlgebraParams non_galois(QuadElem b);
  /// As above but with an explicit a, which must equal tau(b).
  static AlgebraParams non_galois(QuadElem a, QuadElem b);

  /// a = (2 + sqrt(-3)) / (2 - sqrt(-3)) over L = Q(zeta_9).
  static AlgebraParams default_galois();
  /// b = 2 zeta_3, a = tau(b).
  static AlgebraParams default_non_galois();

  AlgebraKind kind() const { return kind_; }
  const QuadElem& a() const { return a_; }
  /// Only set for NonGalois.
  const std::optional<QuadElem>& b() const { return b_; }

  friend bool operator==(const AlgebraParams& x, const AlgebraParams& y) {
    return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  AlgebraParams(AlgebraKind k, QuadElem a, std::optional<QuadElem> b)
      : kind_(k), a_(std::move(a)), b_(std::move(b)) {}

  AlgebraKind kind_;
  QuadElem a_;
  std::optional<QuadElem> b_;
};

/// tau rho = rho tau on zeta^i, i = 0..5.
bool galois_actions_commute();

template <class L>
struct FieldTraits;

template <>
struct FieldTraits<CycloElem> {
  static constexpr AlgebraKind kind = AlgebraKind::GaloisC6;
  static CycloElem scalar(const QuadElem& e, const AlgebraParams&) { return embed_E_in_L(e); }
  static bool in_E(const CycloElem& l) { return is_in_E(l); }
  static QuadElem as_E(const CycloElem& l) { return to_E(l); }
};

template <>
struct FieldTraits<CubicExtElem> {
  static constexpr AlgebraKind kind = AlgebraKind::NonGalois;
  static CubicExtElem scalar(const QuadElem& e, const AlgebraParams& p) { return {*p.b(), e}; }
  static bool in_E(const CubicExtElem& l) { return l.is_scalar(); }
  static QuadElem as_E(const CubicExtElem& l);
};

template <class L>
using Matrix3 = std::array<std::array<L, 3>, 3>;

template <class L>
Matrix3<L> operator*(const Matrix3<L>& x, const Matrix3<L>& y);

template <class L>
L determinant(const Matrix3<L>& m);

/// d = l0 + l1 z + l2 z^2 in the cyclic algebra D over E. The L-triple is
/// authoritative; the matrix form is derived on demand.
template <class L>
class AlgebraElem {
 public:
  AlgebraElem(AlgebraParams params, L l0, L l1, L l2);

  static AlgebraElem zero(const AlgebraParams& p);
  static AlgebraElem one(const AlgebraParams& p);
  static AlgebraElem z(const AlgebraParams& p);
  static AlgebraElem scalar(const AlgebraParams& p, const QuadElem& e);
  static AlgebraElem from_L(const AlgebraParams& p, L l);

  const AlgebraParams& params() const { return params_; }
  const L& operator[](int i) const { return l_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;

  AlgebraElem operator-() const;
  AlgebraElem& operator+=(const AlgebraElem& o);
  AlgebraElem& operator-=(const AlgebraElem& o);
  friend AlgebraElem operator+(AlgebraElem x, const AlgebraElem& y) { return x += y; }
  friend AlgebraElem operator-(AlgebraElem x, const AlgebraElem& y) { return x -= y; }
  friend bool operator==(const AlgebraElem& x, const AlgebraElem& y) {
    return x.params_ == y.params_ && x.l_ == y.l_;
  }

  /// Adjugate of the matrix image divided by the reduced norm. Throws
  /// std::domain_error when the reduced norm is zero.
  AlgebraElem inverse() const;

  /// A(l0, l1, l2): the matrix of right multiplication by d on the basis
  /// 1, z, z^2, so that to_matrix(d e) = to_matrix(d) to_matrix(e).
  Matrix3<L> to_matrix() const;

  std::string str() const;

  /// Throws std::invalid_argument unless both elements share params.
  void require_same(const AlgebraElem& o) const;

 private:
  AlgebraParams params_;
  std::array<L, 3> l_;
};

/// Multiplication by the relations z l = rho(l) z and z^3 = a.
/// Throws std::invalid_argument on mismatched params.
template <class L>
AlgebraElem<L> algebra_mul(const AlgebraElem<L>& d, const AlgebraElem<L>& e);

template <class L>
AlgebraElem<L> operator*(const AlgebraElem<L>& d, const AlgebraElem<L>& e) {
  return algebra_mul(d, e);
}

using GaloisElem = AlgebraElem<CycloElem>;
using NonGaloisElem = AlgebraElem<CubicExtElem>;

/// N_D(d) = N(l0) + a N(l1) + a^2 N(l2) - a Tr(l0 rho(l1) rho^2(l2)).
template <class L>
QuadElem reduced_norm(const AlgebraElem<L>& d);

/// det of to_matrix(d), brought back to E. Independent of the closed formula.
template <class L>
QuadElem matrix_determinant_norm(const AlgebraElem<L>& d);

/// Galois kind: l0' = tau(l0), l1' = tau(a) tau rho(l2), l2' = tau(a) tau rho^2(l1),
/// the tau-conjugate transpose of A(l0, l1, l2).
GaloisElem involution(const GaloisElem& d);
/// NonGalois kind: theta <-> z. With l_j = sum_k e_jk theta^k the image has
/// l_k' = sum_j tau(e_jk) theta^j.
NonGaloisElem involution(const NonGaloisElem& d);

/// alpha(d) d = 1 and N_D(d) = 1, both exact.
template <class L>
bool is_special_unitary(const AlgebraElem<L>& d);

/// Random element with integer coefficients in [-bound, bound] in every
/// rational slot.
GaloisElem random_galois_elem(const AlgebraParams& p, std::mt19937_64& rng, int bound = 3);
NonGaloisElem random_non_galois_elem(const AlgebraParams& p, std::mt19937_64& rng,
                                     int bound = 3);
CycloElem random_cyclo(std::mt19937_64& rng, int bound = 3);
QuadElem random_quad(std::mt19937_64& rng, int bound = 3);

/// Special unitary element built from a random skew element h
/// (alpha(h) = -h) by the Cayley transform d = (1 + h)^{-1} (1 - h), then
/// corrected to reduced norm 1 as c d^3 with c = N(1 + h) / tau(N(1 + h)).
GaloisElem random_special_unitary(const AlgebraParams& p, std::mt19937_64& rng, int bound = 2);

extern template class AlgebraElem<CycloElem>;
extern template class AlgebraElem<CubicExtElem>;

}  // namespace rbg
