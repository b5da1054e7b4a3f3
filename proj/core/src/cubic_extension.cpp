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
#include "rbg/cubic_extension.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rbg/errors.hpp"

namespace rbg {

void CubicExtElem::require_same_field(const CubicExtElem& o) const {
  if (!(b_ == o.b_))
    throw std::invalid_argument("E(theta) elements with different theta^3: " + b_.str() +
                                " vs " + o.b_.str());
}

bool CubicExtElem::is_zero() const {
  return e_[0].is_zero() && e_[1].is_zero() && e_[2].is_zero();
}

CubicExtElem CubicExtElem::operator-() const { return {b_, {-e_[0], -e_[1], -e_[2]}}; }

CubicExtElem& CubicExtElem::operator+=(const CubicExtElem& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < 3; ++i) e_[i] += o.e_[i];
  return *this;
}

CubicExtElem& CubicExtElem::operator-=(const CubicExtElem& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < 3; ++i) e_[i] -= o.e_[i];
  return *this;
}

// theta^3 = b, theta^4 = b theta.
CubicExtElem operator*(const CubicExtElem& x, const CubicExtElem& y) {
  x.require_same_field(y);
  const auto& a = x.e_;
  const auto& c = y.e_;
  QuadElem t3 = a[1] * c[2] + a[2] * c[1];
  QuadElem t4 = a[2] * c[2];
  return {x.b_,
          {a[0] * c[0] + x.b_ * t3, a[0] * c[1] + a[1] * c[0] + x.b_ * t4,
           a[0] * c[2] + a[1] * c[1] + a[2] * c[0]}};
}

CubicExtElem CubicExtElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in E(theta)");
  CubicExtElem r1 = rho(*this);
  CubicExtElem cofactor = r1 * rho(r1);
  CubicExtElem n = *this * cofactor;
  if (!n.is_scalar()) throw ConsistencyError("E(theta) norm left the base field");
  QuadElem inv = n.e_[0].inverse();
  return {b_, {cofactor.e_[0] * inv, cofactor.e_[1] * inv, cofactor.e_[2] * inv}};
}

std::string CubicExtElem::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CubicExtElem& e) {
  return os << "(" << e[0] << ") + (" << e[1] << ")*t + (" << e[2] << ")*t^2";
}

CubicExtElem rho(const CubicExtElem& l) {
  const QuadElem z3 = QuadElem::zeta3();
  return {l.b(), {l[0], l[1] * z3, l[2] * z3 * z3}};
}

NormTrace norm_trace_L_over_E(const CubicExtElem& l) {
  CubicExtElem r1 = rho(l);
  CubicExtElem r2 = rho(r1);
  CubicExtElem n = l * r1 * r2;
  CubicExtElem t = l + r1 + r2;
  if (!n.is_scalar() || !t.is_scalar())
    throw ConsistencyError("E(theta) norm or trace left the base field");
  return {n[0], t[0]};
}

QuadElem norm_L_over_E(const CubicExtElem& l) { return norm_trace_L_over_E(l).norm; }
QuadElem trace_L_over_E(const CubicExtElem& l) { return norm_trace_L_over_E(l).trace; }

}  // namespace rbg
