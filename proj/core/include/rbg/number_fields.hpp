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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbg/cubic_extension.hpp"
#include "rbg/cyclotomic.hpp"
#include "rbg/quadratic.hpp"
#include "rbg/rational.hpp"

namespace rbg {

bool is_prime(std::int64_t n);
/// Throws PreconditionError unless n is prime.
void require_prime(std::int64_t n, const char* what);

/// Behaviour of a rational prime in E = Q(sqrt(-3)).
enum class SplitType { Ramified, Split, Inert };
std::string to_string(SplitType t);

/// Brute-force search for x with x^2 = -3 (mod p). p must be an odd prime.
bool minus3_is_square_mod(std::int64_t p);

struct SplittingData {
  SplitType type;
  /// Residue degree of p in L = Q(zeta_9); empty for the ramified prime 3.
  std::optional<int> residue_degree_in_L;
};

/// Split type of p in E and residue degree of p in Q(zeta_9), which is the
/// multiplicative order of p mod 9. p = 2 is inert: w^2 - w + 1 has no root
/// mod 2.
SplittingData splitting_data(std::int64_t p);

/// Hensel-lifts a root of w^2 - w + 1 from Z/p to Z/p^precision. The lift
/// starts from the smallest root mod p. Throws PreconditionError when p is
/// not split in E.
Integer hensel_lift_omega_root(std::int64_t p, int precision);

/// 2w - 1 for the lifted omega root: a square root of -3 mod p^precision.
Integer padic_sqrt_minus3(std::int64_t p, int precision);

struct ObstructionReport {
  std::int64_t prime = 0;
  SplitType split_type_in_E = SplitType::Split;
  int residue_degree_in_L = 0;
  int precision = 0;
  /// The two embeddings E -> Q_p send omega to omega_root and to 1 - omega_root.
  Integer omega_root;
  std::vector<long> valuations;
  std::vector<int> valuations_mod_3;
  bool obstructed = false;
};

inline constexpr int kDefaultPadicPrecision = 8;

/// Sufficient test for a not being a norm from L to E: at a prime p split in
/// E whose primes are inert in L, the local extension is unramified cubic and
/// its norms are exactly the elements of valuation divisible by 3.
///
/// Throws PreconditionError when p is not split in E or its residue degree in
/// L is not 3, or when precision < 2; ConsistencyError when the precision is
/// too small to resolve a valuation.
ObstructionReport local_norm_obstruction(const QuadElem& a, std::int64_t p,
                                         int precision = kDefaultPadicPrecision);

/// True iff p is a usable witness prime for local_norm_obstruction.
bool is_obstruction_witness_candidate(std::int64_t p);

}  // namespace rbg
