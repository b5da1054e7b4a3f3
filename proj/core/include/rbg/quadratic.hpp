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

#include <iosfwd>
#include <optional>
#include <string>

#include "rbg/rational.hpp"

namespace rbg {

/// Element x + y*omega of E = Q(sqrt(-3)), with omega = (1 + sqrt(-3))/2.
///
/// The basis {1, omega} spans the ring of integers Z[omega]; omega satisfies
/// omega^2 = omega - 1. sqrt(-3) = 2*omega - 1 and zeta_3 = omega - 1.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rational x, Rational y = 0) : x_(std::move(x)), y_(std::move(y)) {}
  QuadElem(long x) : x_(x) {}

  static QuadElem omega() { return {0, 1}; }
  static QuadElem sqrt_minus3() { return {-1, 2}; }
  static QuadElem zeta3() { return {-1, 1}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }

  /// Nontrivial automorphism of E/Q: sqrt(-3) -> -sqrt(-3).
  QuadElem conj() const { return {x_ + y_, -y_}; }
  /// N_{E/Q}(e) = e * conj(e) = x^2 + xy + y^2.
  Rational norm() const { return x_ * x_ + x_ * y_ + y_ * y_; }
  Rational trace() const { return 2 * x_ + y_; }

  /// Throws std::domain_error on zero.
  QuadElem inverse() const;

  QuadElem operator-() const { return {-x_, -y_}; }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

  QuadElem pow(unsigned e) const;

  /// "x + y*w" style rendering, used in reports.
  std::string str() const;

 private:
  Rational x_{0};
  Rational y_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadElem& e);

/// Parses "x" or "x,y" (rationals) as x + y*omega.
QuadElem parse_quad(const std::string& text);

/// Returns c with c^3 == e when e is a cube in E, otherwise nothing.
/// Exact: reduces to finding rational roots of t^3 - 3 N(c) t - Tr(e).
std::optional<QuadElem> cube_root_in_E(const QuadElem& e);

}  // namespace rbg
