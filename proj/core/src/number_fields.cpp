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
#include "rbg/number_fields.hpp"

#include "rbg/errors.hpp"

namespace rbg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::int64_t n, const char* what) {
  if (!is_prime(n))
    throw PreconditionError(std::string(what) + ": " + std::to_string(n) + " is not prime");
}

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::Ramified: return "ramified";
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
  }
  return "?";
}

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

bool minus3_is_square_mod(std::int64_t p) {
  const std::int64_t target = ((-3 % p) + p) % p;
  for (std::int64_t x = 0; x <= p / 2; ++x) {
    if (static_cast<std::int64_t>((static_cast<Wide>(x) * x) % p) == target) return true;
  }
  return false;
}

SplittingData splitting_data(std::int64_t p) {
  require_prime(p, "splitting_data");
  if (p == 3) return {SplitType::Ramified, std::nullopt};
  SplitType type;
  if (p == 2) type = SplitType::Inert;
  else type = minus3_is_square_mod(p) ? SplitType::Split : SplitType::Inert;

  int order = 1;
  std::int64_t acc = p % 9;
  while (acc != 1) {
    acc = (acc * (p % 9)) % 9;
    ++order;
  }
  return {type, order};
}

Integer hensel_lift_omega_root(std::int64_t p, int precision) {
  require_prime(p, "hensel_lift_omega_root");
  if (precision < 1) throw PreconditionError("precision must be positive");
  if (splitting_data(p).type != SplitType::Split)
    throw PreconditionError("omega has no root mod " + std::to_string(p) + " (not split in E)");

  Integer w = -1;
  for (std::int64_t x = 0; x < p; ++x) {
    Integer f = Integer(x) * x - x + 1;
    if (f % p == 0) {
      w = x;
      break;
    }
  }
  if (w < 0) throw ConsistencyError("split prime without a root of w^2 - w + 1");

  // Newton step w <- w - f(w)/f'(w); f'(w) = 2w - 1 is a unit since p != 3.
  Integer modulus = p;
  for (int k = 1; k < precision; ++k) {
    modulus *= p;
    Integer f = w * w - w + 1;
    Integer df = 2 * w - 1;
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw ConsistencyError("Hensel lift: derivative not invertible");
    w = w - f * inv;
    w %= modulus;
    if (w < 0) w += modulus;
  }
  Integer check = w * w - w + 1;
  if (check % modulus != 0) throw ConsistencyError("Hensel lift failed to converge");
  return w;
}

Integer padic_sqrt_minus3(std::int64_t p, int precision) {
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(precision));
  Integer r = (2 * hensel_lift_omega_root(p, precision) - 1) % modulus;
  if (r < 0) r += modulus;
  return r;
}

bool is_obstruction_witness_candidate(std::int64_t p) {
  if (!is_prime(p) || p == 3) return false;
  SplittingData s = splitting_data(p);
  return s.type == SplitType::Split && s.residue_degree_in_L == 3;
}

}  // namespace rbg
