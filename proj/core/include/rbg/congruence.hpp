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
#include <string>
#include <vector>

#include "rbg/provenance.hpp"
#include "rbg/residue_ring.hpp"
#include "rbg/unitary_groups.hpp"

namespace rbg {

struct TowerStep {
  int k = 0;  // index [Gamma(q^k) : Gamma(q^{k+1})]
  TaggedCount index;
};

/// Indices of consecutive congruence subgroups, read off from the finite
/// reduction targets SU_3(O/q^k). Gamma itself is never constructed.
struct CongruenceTower {
  std::int64_t q = 0;
  std::int64_t p = 0;
  RingKind kind = RingKind::Inert;
  std::vector<TowerStep> steps;
  bool strictly_nested = false;
  std::string scope_note;
};

/// Steps for k = 0 .. n_max - 1. k = 0 is the order of SU_3(O/q); later steps
/// are kernel sizes of SU_3(O/q^{k+1}) -> SU_3(O/q^k). For inert q these are
/// enumerated up to the highest level the ceiling allows and taken from the
/// classical formulas beyond it; split q always uses formulas.
///
/// Throws PreconditionError when q = p (the congruence level must be prime to
/// p), when either is not prime, when n_max < 1, or when q = 3 (no formula and
/// no enumeration past level 1 is attempted).
CongruenceTower congruence_tower(std::int64_t q, int n_max, std::int64_t p,
                                 const EnumerationOptions& options = {});

}  // namespace rbg
