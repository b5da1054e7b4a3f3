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
#include "rbg/errors.hpp"
#include "rbg/number_fields.hpp"

namespace rbg {

namespace {

long valuation(Integer v, const Integer& p) {
  long k = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

// v_p of the image of a under omega -> root (mod p^precision).
long embedded_valuation(const QuadElem& a, const Integer& root, std::int64_t p, int precision) {
  Integer m = lcm(Integer(a.x().get_den()), Integer(a.y().get_den()));
  Rational sx = a.x() * m;
  Rational sy = a.y() * m;
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(precision));
  Integer image = (Integer(sx.get_num()) + Integer(sy.get_num()) * root) % modulus;
  if (image < 0) image += modulus;
  if (image == 0)
    throw ConsistencyError("p-adic precision " + std::to_string(precision) +
                           " too small to resolve the valuation of " + a.str());
  return valuation(image, Integer(p)) - valuation(m, Integer(p));
}

}  // namespace

ObstructionReport local_norm_obstruction(const QuadElem& a, std::int64_t p, int precision) {
  require_prime(p, "local_norm_obstruction");
  if (precision < 2) throw PreconditionError("p-adic precision must be at least 2");
  if (a.is_zero()) throw PreconditionError("local_norm_obstruction: a must be nonzero");
  SplittingData s = splitting_data(p);
  if (s.type != SplitType::Split)
    throw PreconditionError("inapplicable prime " + std::to_string(p) + ": " + to_string(s.type) +
                            " in Q(sqrt(-3)), need split");
  if (s.residue_degree_in_L != 3)
    throw PreconditionError("inapplicable prime " + std::to_string(p) + ": residue degree " +
                            std::to_string(s.residue_degree_in_L.value_or(0)) +
                            " in Q(zeta_9), need 3");

  ObstructionReport r;
  r.prime = p;
  r.split_type_in_E = s.type;
  r.residue_degree_in_L = *s.residue_degree_in_L;
  r.precision = precision;
  r.omega_root = hensel_lift_omega_root(p, precision);
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(precision));
  const Integer conjugate_root = (1 - r.omega_root + modulus) % modulus;
  for (const Integer& root : {r.omega_root, conjugate_root}) {
    long v = embedded_valuation(a, root, p, precision);
    r.valuations.push_back(v);
    r.valuations_mod_3.push_back(static_cast<int>(((v % 3) + 3) % 3));
  }
  for (int res : r.valuations_mod_3)
    if (res != 0) r.obstructed = true;
  return r;
}

}  // namespace rbg
