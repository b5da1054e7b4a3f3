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
#include <string>

#include "rbg/cyclotomic.hpp"
#include "rbg/quadratic.hpp"

namespace rbg {

/// Element e0 + e1*theta + e2*theta^2 of the Kummer extension E(theta),
/// theta^3 = b, handled symbolically (no embedding of theta is chosen).
///
/// Every element carries its defining constant b; mixing elements with
/// different b throws std::invalid_argument.
class CubicExtElem {
 public:
  using Coeffs = std::array<QuadElem, 3>;

  CubicExtElem() = default;
  CubicExtElem(QuadElem b, Coeffs e) : b_(std::move(b)), e_(std::move(e)) {}
  CubicExtElem(QuadElem b, const QuadElem& scalar) : b_(std::move(b)) { e_[0] = scalar; }

  static CubicExtElem theta(const QuadElem& b) { return {b, {QuadElem(0), QuadElem(1), QuadElem(0)}}; }

  const QuadElem& b() const { return b_; }
  const Coeffs& coeffs() const { return e_; }
  const QuadElem& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_scalar() const { return e_[1].is_zero() && e_[2].is_zero(); }

  CubicExtElem operator-() const;
  CubicExtElem& operator+=(const CubicExtElem& o);
  CubicExtElem& operator-=(const CubicExtElem& o);
  friend CubicExtElem operator+(CubicExtElem a, const CubicExtElem& b) { return a += b; }
  friend CubicExtElem operator-(CubicExtElem a, const CubicExtElem& b) { return a -= b; }
  friend CubicExtElem operator*(const CubicExtElem& a, const CubicExtElem& b);
  CubicExtElem& operator*=(const CubicExtElem& o) { return *this = *this * o; }
  friend bool operator==(const CubicExtElem& a, const CubicExtElem& b) {
    return a.b_ == b.b_ && a.e_ == b.e_;
  }

  /// Throws std::domain_error on zero.
  CubicExtElem inverse() const;

  std::string str() const;

 private:
  void require_same_field(const CubicExtElem& o) const;

  QuadElem b_{1};
  Coeffs e_{};
};

std::ostream& operator<<(std::ostream& os, const CubicExtElem& e);

/// Generator of Gal(E(theta)/E): theta -> zeta_3 * theta.
CubicExtElem rho(const CubicExtElem& l);

NormTrace norm_trace_L_over_E(const CubicExtElem& l);
QuadElem norm_L_over_E(const CubicExtElem& l);
QuadElem trace_L_over_E(const CubicExtElem& l);

}  // namespace rbg
