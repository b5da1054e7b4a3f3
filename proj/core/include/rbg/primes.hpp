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

#include "rbg/number_fields.hpp"

namespace rbg {

/// Behaviour of a rational prime in E = Q(sqrt(-3)). The inert primes are
/// the good ones: there the local group is the quasi-split SU_3.
struct PrimeClass {
  std::int64_t p = 0;
  SplitType cls = SplitType::Inert;
  bool good = false;
};

/// p = 3 ramifies; p = 2 is inert (w^2 - w + 1 is irreducible mod 2); other
/// primes split iff a brute-force search finds a square root of -3 mod p.
/// For p > 3 the answer is cross-checked against the residue of p mod 12 and
/// a disagreement raises ConsistencyError. Throws PreconditionError for
/// non-primes.
PrimeClass classify_prime(std::int64_t p);

/// Ascending inert primes <= bound.
std::vector<std::int64_t> good_primes_up_to(std::int64_t bound);

/// The mod-12 rule alone, for p > 3: inert iff p = 5 or 11 (mod 12).
bool mod12_says_inert(std::int64_t p);

}  // namespace rbg
