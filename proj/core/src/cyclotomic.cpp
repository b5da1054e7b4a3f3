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
#include "rbg/cyclotomic.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rbg/errors.hpp"

namespace rbg {

namespace {

// Folds a coefficient vector of any length into the power basis using
// x^k = -x^(k-3) - x^(k-6) for k >= 6.
template <std::size_t N>
CycloElem::Coeffs reduce(std::array<Rational, N> wide) {
  for (std::size_t k = N; k-- > CycloElem::kDegree;) {
    if (wide[k] == 0) continue;
    wide[k - 3] -= wide[k];
    wide[k - 6] -= wide[k];
    wide[k] = 0;
  }
  CycloElem::Coeffs out;
  for (std::size_t i = 0; i < CycloElem::kDegree; ++i) out[i] = std::move(wide[i]);
  return out;
}

}  // namespace

CycloElem CycloElem::zeta_power(long k) {
  long e = ((k % 9) + 9) % 9;
  std::array<Rational, 9> wide{};
  wide[static_cast<std::size_t>(e)] = 1;
  return CycloElem(reduce(wide));
}

bool CycloElem::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

CycloElem CycloElem::galois(int k) const {
  if (k % 3 == 0) throw std::invalid_argument("galois: exponent must be coprime to 9");
  std::array<Rational, 9> wide{};
  for (int i = 0; i < kDegree; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    int e = ((i * k) % 9 + 9) % 9;
    wide[static_cast<std::size_t>(e)] += c_[static_cast<std::size_t>(i)];
  }
  return CycloElem(reduce(wide));
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  for (std::size_t i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  for (std::size_t i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) { return *this = *this * o; }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  std::array<Rational, 2 * CycloElem::kDegree - 1> wide{};
  for (std::size_t i = 0; i < CycloElem::kDegree; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < CycloElem::kDegree; ++j) {
      if (b.c_[j] == 0) continue;
      wide[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycloElem(reduce(wide));
}

// l^{-1} = rho(l) rho^2(l) / N_{L/E}(l), and the norm is inverted in E.
CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_9)");
  CycloElem r1 = galois_rho(*this);
  CycloElem r2 = galois_rho(r1);
  CycloElem cofactor = r1 * r2;
  QuadElem n = to_E(*this * cofactor);
  return cofactor * embed_E_in_L(n.inverse());
}

std::string CycloElem::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloElem& e) {
  bool first = true;
  for (int i = 0; i < CycloElem::kDegree; ++i) {
    const Rational& c = e[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational ac = abs(c);
    if (i == 0) os << ac.get_str();
    else {
      if (ac != 1) os << ac.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os;
}

CycloElem embed_E_in_L(const QuadElem& e) {
  CycloElem::Coeffs c{};
  c[0] = e.x() + e.y();
  c[3] = e.y();
  return CycloElem(std::move(c));
}

bool is_in_E(const CycloElem& l) {
  return l[1] == 0 && l[2] == 0 && l[4] == 0 && l[5] == 0;
}

QuadElem to_E(const CycloElem& l) {
  if (!is_in_E(l)) throw ConsistencyError("element of Q(zeta_9) is not in Q(sqrt(-3)): " + l.str());
  return {l[0] - l[3], l[3]};
}

CycloElem galois_rho(const CycloElem& l) { return l.galois(4); }
CycloElem galois_tau(const CycloElem& l) { return l.galois(8); }

NormTrace norm_trace_L_over_E(const CycloElem& l) {
  CycloElem r1 = galois_rho(l);
  CycloElem r2 = galois_rho(r1);
  return {to_E(l * r1 * r2), to_E(l + r1 + r2)};
}

QuadElem norm_L_over_E(const CycloElem& l) { return norm_trace_L_over_E(l).norm; }
QuadElem trace_L_over_E(const CycloElem& l) { return norm_trace_L_over_E(l).trace; }

}  // namespace rbg
