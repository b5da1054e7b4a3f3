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

// Slow, independent reference implementations used only by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "rbg/cyclotomic.hpp"
#include "rbg/quadratic.hpp"

namespace oracle {

// Polynomials over Q, coefficient i for x^i.
using Poly = std::vector<mpq_class>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Remainder by long division by a monic modulus.
inline Poly rem(Poly a, const Poly& monic) {
  trim(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const mpq_class lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] -= lead * monic[i];
    trim(a);
  }
  return a;
}

inline const Poly& phi9() {
  static const Poly p{1, 0, 0, 1, 0, 0, 1};
  return p;
}

inline Poly from_cyclo(const rbg::CycloElem& l) {
  Poly p(l.coeffs().begin(), l.coeffs().end());
  trim(p);
  return p;
}

inline rbg::CycloElem to_cyclo(const Poly& p) {
  rbg::CycloElem::Coeffs c{};
  for (std::size_t i = 0; i < p.size() && i < 6; ++i) c[i] = p[i];
  return rbg::CycloElem(c);
}

inline rbg::CycloElem cyclo_mul(const rbg::CycloElem& a, const rbg::CycloElem& b) {
  return to_cyclo(rem(mul(from_cyclo(a), from_cyclo(b)), phi9()));
}

// Substitutes x -> x^k and reduces.
inline rbg::CycloElem cyclo_galois(const rbg::CycloElem& a, int k) {
  const Poly p = from_cyclo(a);
  Poly out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t e = i * static_cast<std::size_t>(k);
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] += p[i];
  }
  return to_cyclo(rem(out, phi9()));
}

// Euler's criterion for (-3 / p), p an odd prime other than 3.
inline bool minus3_is_residue(std::int64_t p) {
  mpz_class r;
  const mpz_class base = p - 3, mod = p;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), mod.get_mpz_t());
  return r == 1;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// v_p of a nonzero integer.
inline long valuation(mpz_class v, long p) {
  long k = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

}  // namespace oracle
