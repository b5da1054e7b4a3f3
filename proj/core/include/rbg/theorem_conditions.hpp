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

#include "rbg/cyclic_algebra.hpp"
#include "rbg/number_fields.hpp"

namespace rbg {

/// Outcome of the division-algebra condition (i). Inconclusive means the
/// witness search found no obstruction; it never counts as verified.
enum class ClauseStatus { Verified, Refuted, Inconclusive };
std::string to_string(ClauseStatus s);

struct ConditionReport {
  QuadElem a;

  // (i) a in E^x and a, a^2 not norms from L.
  ClauseStatus division = ClauseStatus::Inconclusive;
  std::string division_reason;
  std::optional<ObstructionReport> witness_a;
  std::optional<ObstructionReport> witness_a2;
  std::vector<std::int64_t> searched_primes;

  // (ii) a tau(a) = 1.
  QuadElem norm_E_over_Q;
  bool unitary_constant = false;

  // (iii) tau rho = rho tau on L.
  bool galois_commute = false;

  bool all_verified() const {
    return division == ClauseStatus::Verified && unitary_constant && galois_commute;
  }
};

inline constexpr std::int64_t kDefaultWitnessBound = 200;

/// Checks the three conditions under which the Galois-kind involution makes
/// D a division algebra with an involution of the second kind.
///
/// Clause (i) is refuted exactly when a = 0 or a or a^2 is a cube in E (cubes
/// are norms of elements of E). Otherwise primes below witness_bound that
/// pass is_obstruction_witness_candidate are tried in increasing order and
/// the first one obstructing both a and a^2 is recorded.
ConditionReport check_theorem_conditions(const AlgebraParams& params,
                                         std::int64_t witness_bound = kDefaultWitnessBound,
                                         int precision = kDefaultPadicPrecision);

}  // namespace rbg
