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
#include <iosfwd>
#include <optional>
#include <string>

#include "rbg/quadratic.hpp"
#include "rbg/rational.hpp"

namespace rbg {

/// Element of L = Q(zeta_9) = Q[x]/(x^6 + x^3 + 1), stored as the six
/// coefficients of the power basis 1, zeta, ..., zeta^5.
///
/// Every operation returns the reduced representative, so equality is
/// coefficient-wise. E = Q(sqrt(-3)) sits inside L via zeta_3 = zeta^3.
class CycloElem {
 public:
  static constexpr int kDegree = 6;
  using Coeffs = std::array<Rational, kDegree>;

  CycloElem() = default;
  explicit CycloElem(Coeffs c) : c_(std::move(c)) {}
  CycloElem(long v) { c_[0] = v; }
  CycloElem(const Rational& v) { c_[0] = v; }

  /// zeta_9^k for any integer k.
  static CycloElem zeta_power(long k);
  static CycloElem zeta() { return zeta_power(1); }

  const Coeffs& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;

  /// Applies sigma_k: zeta -> zeta^k for k coprime to 9.
  CycloElem galois(int k) const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.c_ == b.c_; }

  /// Throws std::domain_error on zero.
  CycloElem inverse() const;
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) {
    return a * b.inverse();
  }

  std::string str() const;

 private:
  Coeffs c_{};
};

std::ostream& operator<<(std::ostream& os, const CycloElem& e);

/// x + y*omega -> (x + y) + y*zeta^3, since omega = 1 + zeta_3.
CycloElem embed_E_in_L(const QuadElem& e);
/// True iff the element lies in the subfield E (only 1, zeta^3 used).
bool is_in_E(const CycloElem& l);
/// Inverse of embed_E_in_L; throws ConsistencyError when !is_in_E(l).
QuadElem to_E(const CycloElem& l);

/// Generator of Gal(L/E): zeta -> zeta_3 * zeta = zeta^4.
CycloElem galois_rho(const CycloElem& l);
/// Complex conjugation: zeta -> zeta^8.
CycloElem galois_tau(const CycloElem& l);

inline CycloElem rho(const CycloElem& l) { return galois_rho(l); }

/// (N_{L/E}(l), Tr_{L/E}(l)) = (l rho(l) rho^2(l), l + rho(l) + rho^2(l)).
struct NormTrace {
  QuadElem norm;
  QuadElem trace;
};
NormTrace norm_trace_L_over_E(const CycloElem& l);
QuadElem norm_L_over_E(const CycloElem& l);
QuadElem trace_L_over_E(const CycloElem& l);

}  // namespace rbg
