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
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "rbg/congruence.hpp"
#include "rbg/errors.hpp"
#include "rbg/primes.hpp"
#include "rbg/residue_ring.hpp"
#include "rbg/unitary_groups.hpp"

using namespace rbg;

namespace {

// GF(4) = {0, 1, w, w + 1} as bit pairs (bit 1 = w), w^2 = w + 1.
int f4_mul(int a, int b) {
  int r = 0;
  // (a0 + a1 w)(b0 + b1 w) = a0b0 + a1b1 + (a0b1 + a1b0 + a1b1) w
  const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
  r |= (a0 & b0) ^ (a1 & b1);
  r |= ((a0 & b1) ^ (a1 & b0) ^ (a1 & b1)) << 1;
  return r;
}
int f4_conj(int a) { return f4_mul(a, a); }  // Frobenius

// Counts g in M_3(GF(4)) with adjoint(g) g = 1 and det g = 1, over all 4^9.
long naive_su3_f4() {
  long count = 0;
  std::array<int, 9> g{};
  for (long idx = 0; idx < (1L << 18); ++idx) {
    for (int i = 0; i < 9; ++i) g[static_cast<std::size_t>(i)] = static_cast<int>((idx >> (2 * i)) & 3);
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = 0; j < 3 && ok; ++j) {
        int s = 0;
        for (int k = 0; k < 3; ++k) s ^= f4_mul(f4_conj(g[static_cast<std::size_t>(3 * k + i)]), g[static_cast<std::size_t>(3 * k + j)]);
        ok = s == (i == j ? 1 : 0);
      }
    if (!ok) continue;
    auto at = [&](int r, int c) { return g[static_cast<std::size_t>(3 * r + c)]; };
    const int det = f4_mul(at(0, 0), f4_mul(at(1, 1), at(2, 2)) ^ f4_mul(at(1, 2), at(2, 1))) ^
                    f4_mul(at(0, 1), f4_mul(at(1, 0), at(2, 2)) ^ f4_mul(at(1, 2), at(2, 0))) ^
                    f4_mul(at(0, 2), f4_mul(at(1, 0), at(2, 1)) ^ f4_mul(at(1, 1), at(2, 0)));
    if (det == 1) ++count;
  }
  return count;
}

// Z[w]/4 as pairs (x, y) = x + y w.
struct Z4w {
  int x, y;
};
Z4w add(Z4w a, Z4w b) { return {(a.x + b.x) & 3, (a.y + b.y) & 3}; }
Z4w mul(Z4w a, Z4w b) {
  return {(a.x * b.x - a.y * b.y + 16) & 3, (a.x * b.y + a.y * b.x + a.y * b.y) & 3};
}
Z4w conj(Z4w a) { return {(a.x + a.y) & 3, (4 - a.y) & 3}; }
bool eq(Z4w a, Z4w b) { return a.x == b.x && a.y == b.y; }

// Counts g = 1 + 2M in SU_3(Z[w]/4), M ranging over M_3(F_4) lifted to {0,1}+{0,1}w.
long naive_kernel_level2() {
  long count = 0;
  std::array<Z4w, 9> g{};
  for (long idx = 0; idx < (1L << 18); ++idx) {
    for (int i = 0; i < 9; ++i) {
      const int bits = static_cast<int>((idx >> (2 * i)) & 3);
      Z4w e{2 * (bits & 1), 2 * (bits >> 1)};
      if (i % 4 == 0) e.x = (e.x + 1) & 3;
      g[static_cast<std::size_t>(i)] = e;
    }
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = 0; j < 3 && ok; ++j) {
        Z4w s{0, 0};
        for (int k = 0; k < 3; ++k)
          s = add(s, mul(conj(g[static_cast<std::size_t>(3 * k + i)]), g[static_cast<std::size_t>(3 * k + j)]));
        ok = eq(s, Z4w{i == j ? 1 : 0, 0});
      }
    if (!ok) continue;
    auto at = [&](int r, int c) { return g[static_cast<std::size_t>(3 * r + c)]; };
    auto minor = [&](int a, int b, int c, int d) {
      const Z4w p = mul(at(a / 3, a % 3), at(b / 3, b % 3)), q = mul(at(c / 3, c % 3), at(d / 3, d % 3));
      return Z4w{(p.x - q.x + 4) & 3, (p.y - q.y + 4) & 3};
    };
    Z4w det = mul(at(0, 0), minor(4, 8, 5, 7));
    const Z4w t = mul(at(0, 1), minor(3, 8, 5, 6));
    det = Z4w{(det.x - t.x + 4) & 3, (det.y - t.y + 4) & 3};
    det = add(det, mul(at(0, 2), minor(3, 7, 4, 6)));
    if (eq(det, Z4w{1, 0})) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("prime classification") {
  CHECK(classify_prime(3).cls == SplitType::Ramified);
  CHECK(classify_prime(5).cls == SplitType::Inert);
  CHECK(classify_prime(5).good);
  CHECK(classify_prime(7).cls == SplitType::Split);
  CHECK_FALSE(classify_prime(7).good);
  CHECK(classify_prime(2).good);
  CHECK_THROWS_AS(classify_prime(15), PreconditionError);
  CHECK_THROWS_AS(classify_prime(1), PreconditionError);
  CHECK(good_primes_up_to(30) == std::vector<std::int64_t>{2, 5, 11, 17, 23, 29});
  CHECK(good_primes_up_to(4) == std::vector<std::int64_t>{2});
  CHECK_THROWS_AS(good_primes_up_to(1), PreconditionError);

  for (std::int64_t p = 5; p < 10000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    const PrimeClass c = classify_prime(p);
    CHECK(c.good == !oracle::minus3_is_residue(p));
    CHECK(c.good == (p % 12 == 5 || p % 12 == 11));
  }
}

TEST_CASE("residue rings") {
  const ResidueRing f4(2, 1);
  CHECK(f4.kind() == RingKind::Inert);
  CHECK(f4.size() == 4);
  const RingElem w = f4.omega();
  CHECK(f4.norm(w) == 1);
  CHECK(f4.mul(w, f4.conj(w)) == f4.one());
  CHECK(f4.mul(w, w) == f4.sub(w, f4.one()));
  for (std::uint64_t i = 1; i < 4; ++i) CHECK(f4.is_unit(f4.element(i)));

  const ResidueRing s7(7, 2);
  CHECK(s7.kind() == RingKind::Split);
  const RingElem a{3, 5};
  CHECK(s7.conj(a) == RingElem{5, 3});
  CHECK(s7.mul(s7.omega(), s7.omega()) == s7.sub(s7.omega(), s7.one()));
  CHECK_THROWS_AS(s7.inverse(RingElem{7, 1}), std::domain_error);

  const ResidueRing r3(3, 2);
  CHECK(r3.kind() == RingKind::Ramified);
  CHECK_FALSE(r3.is_unit(r3.add(r3.omega(), r3.one())));  // 1 + w has norm 3

  for (const ResidueRing& R : {ResidueRing(2, 3), ResidueRing(5, 2), ResidueRing(7, 2), ResidueRing(3, 3)}) {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<std::uint64_t> pick(0, R.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const RingElem x = R.element(pick(rng)), y = R.element(pick(rng)), z = R.element(pick(rng));
      CHECK(R.norm(R.mul(x, y)) == (R.norm(x) * R.norm(y)) % R.modulus());
      CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
      CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
      CHECK(R.conj(R.conj(x)) == x);
      CHECK(R.conj(R.mul(x, y)) == R.mul(R.conj(x), R.conj(y)));
      if (R.is_unit(x)) CHECK(R.mul(x, R.inverse(x)) == R.one());
      else CHECK_THROWS_AS(R.inverse(x), std::domain_error);
    }
  }
  CHECK_THROWS_AS(ResidueRing(4, 1), PreconditionError);
  CHECK_THROWS_AS(ResidueRing(2, 0), PreconditionError);
}

TEST_CASE("SU_3 over O/2 matches the brute-force oracle") {
  const long oracle_order = naive_su3_f4();
  CHECK(oracle_order == 216);
  EnumerationOptions opts;
  opts.closure_check = true;
  const FiniteGroupReport r = enumerate_su3(2, 1, opts);
  CHECK(r.order.value == oracle_order);
  CHECK(r.order.method == Method::Enumerated);
  CHECK(r.formula_order->value == 216);
  REQUIRE(r.closure.has_value());
  CHECK(r.closure->passed());
  const ResidueRing R(2, 1);
  const auto elems = su3_elements(R, {});
  CHECK(std::count(elems.begin(), elems.end(), ring_identity(R)) == 1);
}

TEST_CASE("SU_3 over O/4 and the reduction kernel") {
  const long oracle_kernel = naive_kernel_level2();
  CHECK(oracle_kernel == 256);
  const FiniteGroupReport r = enumerate_su3(2, 2);
  REQUIRE(r.reductions.size() == 1);
  CHECK(r.reductions[0].kernel_size.value == oracle_kernel);
  CHECK(r.reductions[0].surjective);
  CHECK(r.reductions[0].orders_consistent);
  CHECK(r.order.value == 216 * 256);
  CHECK(r.level_orders.size() == 2);
}

TEST_CASE("enumeration limits and formulas") {
  EnumerationOptions tiny;
  tiny.ceiling = 1000;
  CHECK_THROWS_AS(enumerate_su3(2, 1, tiny), CeilingExceeded);
  CHECK_THROWS_AS(enumerate_su3(2, 3), CeilingExceeded);
  CHECK_THROWS_AS(enumerate_su3(7, 1), PreconditionError);
  CHECK(su3_order_formula(2, 1) == Integer(216));
  CHECK(su3_order_formula(5, 1) == Integer(125 * 24 * 126));
  CHECK(su3_order_formula(7, 1) == Integer(343 * 48 * 342));
  CHECK_FALSE(su3_order_formula(3, 1).has_value());
  CHECK_THROWS_AS(su3_formula_report(3, 1), PreconditionError);
  const FiniteGroupReport f = su3_formula_report(7, 2);
  CHECK(f.order.method == Method::Formula);
  CHECK(f.reductions[0].kernel_size.value == Integer(5764801) );

  // Enumeration and the classical formula agree where both are available.
  EnumerationOptions opts;
  opts.ceiling = 20'000'000;
  CHECK(enumerate_su3(5, 1, opts).order.value == *su3_order_formula(5, 1));
  // Ramified rings can still be enumerated directly.
  const auto ram = su3_elements(ResidueRing(3, 1), opts);
  CHECK(!ram.empty());
}

TEST_CASE("ceiling from the environment") {
  ::setenv("RBG_ENUMERATION_CEILING", "1234", 1);
  CHECK(enumeration_ceiling_from_env() == 1234);
  ::setenv("RBG_ENUMERATION_CEILING", "junk", 1);
  CHECK(enumeration_ceiling_from_env() == kDefaultEnumerationCeiling);
  ::unsetenv("RBG_ENUMERATION_CEILING");
  CHECK(enumeration_ceiling_from_env() == kDefaultEnumerationCeiling);
}

TEST_CASE("congruence tower") {
  const CongruenceTower t = congruence_tower(2, 3, 5);
  REQUIRE(t.steps.size() == 3);
  CHECK(t.steps[0].index.value == 216);
  CHECK(t.steps[0].index.method == Method::Enumerated);
  CHECK(t.steps[1].index.value == 256);
  CHECK(t.steps[1].index.method == Method::Enumerated);
  CHECK(t.steps[2].index.value == 256);
  CHECK(t.steps[2].index.method == Method::Formula);
  CHECK(t.strictly_nested);

  const CongruenceTower s = congruence_tower(7, 2, 5);
  CHECK(s.kind == RingKind::Split);
  CHECK(s.steps[0].index.value == Integer(343L * 342 * 48));
  CHECK(s.steps[0].index.method == Method::Formula);
  CHECK(s.strictly_nested);

  CHECK_THROWS_AS(congruence_tower(5, 2, 5), PreconditionError);
  CHECK_THROWS_AS(congruence_tower(3, 2, 5), PreconditionError);
  CHECK_THROWS_AS(congruence_tower(2, 0, 5), PreconditionError);
}
