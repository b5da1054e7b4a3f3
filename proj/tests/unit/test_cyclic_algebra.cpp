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

#include <random>

#include "rbg/cyclic_algebra.hpp"
#include "rbg/errors.hpp"
#include "rbg/theorem_conditions.hpp"
#include "rbg/verification_suite.hpp"

using namespace rbg;

namespace {

const AlgebraParams& gal() {
  static const AlgebraParams p = AlgebraParams::default_galois();
  return p;
}

const AlgebraParams& ngal() {
  static const AlgebraParams p = AlgebraParams::default_non_galois();
  return p;
}

}  // namespace

TEST_CASE("matrix form") {
  const auto one = GaloisElem::one(gal());
  const auto m1 = one.to_matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m1[i][j] == CycloElem(i == j ? 1 : 0));
  const auto mz = GaloisElem::z(gal()).to_matrix();
  const CycloElem a = embed_E_in_L(gal().a());
  CHECK(mz[0][1] == CycloElem(1));
  CHECK(mz[1][2] == CycloElem(1));
  CHECK(mz[2][0] == a);
  CHECK(mz[0][0] == CycloElem(0));
  CHECK(mz[1][1] == CycloElem(0));

  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_galois_elem(gal(), rng), e = random_galois_elem(gal(), rng);
    CHECK((d * e).to_matrix() == d.to_matrix() * e.to_matrix());
    const auto f = random_non_galois_elem(ngal(), rng), g = random_non_galois_elem(ngal(), rng);
    CHECK((f * g).to_matrix() == f.to_matrix() * g.to_matrix());
  }
}

TEST_CASE("multiplication relations") {
  const auto z = GaloisElem::z(gal());
  const auto l = GaloisElem::from_L(gal(), CycloElem::zeta());
  CHECK(z * l == GaloisElem::from_L(gal(), rho(CycloElem::zeta())) * z);
  CHECK(z * (z * z) == GaloisElem::scalar(gal(), gal().a()));
  const auto theta = NonGaloisElem::from_L(ngal(), CubicExtElem::theta(*ngal().b()));
  const auto zn = NonGaloisElem::z(ngal());
  CHECK(zn * theta == NonGaloisElem::scalar(ngal(), QuadElem::zeta3()) * theta * zn);

  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_galois_elem(gal(), rng), e = random_galois_elem(gal(), rng),
               f = random_galois_elem(gal(), rng);
    CHECK((d * e) * f == d * (e * f));
    CHECK(d * (e + f) == d * e + d * f);
    if (!reduced_norm(d).is_zero()) CHECK(d * d.inverse() == GaloisElem::one(gal()));
  }
  CHECK_THROWS_AS(GaloisElem::zero(gal()).inverse(), std::domain_error);
  const auto other = AlgebraParams::galois(QuadElem(2));
  CHECK_THROWS_AS(GaloisElem::one(gal()) * GaloisElem::one(other), std::invalid_argument);
}

TEST_CASE("reduced norm") {
  CHECK(reduced_norm(GaloisElem::one(gal())) == QuadElem(1));
  CHECK(reduced_norm(GaloisElem::z(gal())) == gal().a());
  CHECK(reduced_norm(NonGaloisElem::z(ngal())) == ngal().a());
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_galois_elem(gal(), rng), e = random_galois_elem(gal(), rng);
    CHECK(reduced_norm(d * e) == reduced_norm(d) * reduced_norm(e));
    CHECK(reduced_norm(d) == matrix_determinant_norm(d));
    const auto f = random_non_galois_elem(ngal(), rng), g = random_non_galois_elem(ngal(), rng);
    CHECK(reduced_norm(f * g) == reduced_norm(f) * reduced_norm(g));
    CHECK(reduced_norm(f) == matrix_determinant_norm(f));
  }
}

TEST_CASE("Galois involution") {
  CHECK(involution(GaloisElem::one(gal())) == GaloisElem::one(gal()));
  const auto z = GaloisElem::z(gal());
  const auto expected = GaloisElem::scalar(gal(), gal().a().conj()) * z * z;
  CHECK(involution(z) == expected);
  CHECK(involution(z) * z == GaloisElem::one(gal()));
  std::mt19937_64 rng(24);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_galois_elem(gal(), rng), e = random_galois_elem(gal(), rng);
    CHECK(involution(involution(d)) == d);
    CHECK(involution(d * e) == involution(e) * involution(d));
    CHECK(reduced_norm(involution(d)) == reduced_norm(d).conj());
  }
}

TEST_CASE("non-Galois theta <-> z map") {
  const QuadElem b = *ngal().b();
  const auto theta = NonGaloisElem::from_L(ngal(), CubicExtElem::theta(b));
  const auto z = NonGaloisElem::z(ngal());
  CHECK(involution(theta) == z);
  CHECK(involution(z) == theta);
  CHECK(involution(NonGaloisElem::one(ngal())) == NonGaloisElem::one(ngal()));
  CHECK(ngal().a() == b.conj());

  // No anti-automorphism can swap theta and z: z theta = zeta_3 theta z, and
  // applying one would give theta z = tau(zeta_3) z theta. The map above is
  // involutive and tau-semilinear but not anti-multiplicative on this pair.
  CHECK_FALSE(involution(z * theta) == involution(theta) * involution(z));
  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_non_galois_elem(ngal(), rng);
    CHECK(involution(involution(d)) == d);
    const QuadElem c = random_quad(rng);
    CHECK(involution(NonGaloisElem::scalar(ngal(), c)) == NonGaloisElem::scalar(ngal(), c.conj()));
  }
}

TEST_CASE("special unitary elements") {
  CHECK(is_special_unitary(GaloisElem::one(gal())));
  CHECK(is_special_unitary(GaloisElem::scalar(gal(), QuadElem::zeta3())));
  const auto zeta = GaloisElem::from_L(gal(), CycloElem::zeta());
  CHECK(involution(zeta) * zeta == GaloisElem::one(gal()));
  CHECK(reduced_norm(zeta) == QuadElem::zeta3());
  CHECK_FALSE(is_special_unitary(zeta));

  std::mt19937_64 rng(26);
  std::vector<GaloisElem> sample;
  for (int i = 0; i < 20; ++i) {
    sample.push_back(random_special_unitary(gal(), rng));
    CHECK(is_special_unitary(sample.back()));
  }
  for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
    CHECK(is_special_unitary(sample[i] * sample[i + 1]));
    CHECK(is_special_unitary(sample[i].inverse()));
  }
}

TEST_CASE("theorem conditions") {
  const ConditionReport r = check_theorem_conditions(gal());
  CHECK(r.division == ClauseStatus::Verified);
  REQUIRE(r.witness_a.has_value());
  CHECK(r.witness_a->prime == 7);
  CHECK(r.unitary_constant);
  CHECK(r.galois_commute);
  CHECK(r.all_verified());

  const ConditionReport one = check_theorem_conditions(AlgebraParams::galois(QuadElem(1)));
  CHECK(one.division == ClauseStatus::Refuted);
  CHECK(one.unitary_constant);
  CHECK_FALSE(one.all_verified());

  const ConditionReport s = check_theorem_conditions(AlgebraParams::galois(QuadElem::sqrt_minus3()));
  CHECK_FALSE(s.unitary_constant);
  CHECK(s.norm_E_over_Q == QuadElem(3));

  // A unit whose obstruction needs a prime beyond the search bound.
  const ConditionReport small = check_theorem_conditions(gal(), 7);
  CHECK(small.division == ClauseStatus::Inconclusive);
  CHECK(small.searched_primes.empty());

  CHECK_THROWS_AS(AlgebraParams::galois(QuadElem(0)), PreconditionError);
  CHECK_THROWS_AS(check_theorem_conditions(ngal()), PreconditionError);
  CHECK_THROWS_AS(AlgebraParams::non_galois(QuadElem(8)), PreconditionError);
  CHECK_THROWS_AS(AlgebraParams::non_galois(QuadElem(1), QuadElem(2)), PreconditionError);
}

TEST_CASE("involution suite bookkeeping") {
  const auto g = run_involution_suite(gal(), 50, 7);
  CHECK(g.passed());
  const auto n = run_involution_suite(ngal(), 50, 7);
  CHECK(n.involutive_failures == 0);
  CHECK(n.restricts_to_tau_failures == 0);
  CHECK(n.norm_determinant_failures == 0);
  CHECK(n.anti_multiplicative_failures > 0);
  CHECK_FALSE(n.passed());
}
