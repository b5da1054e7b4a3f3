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
#include "rbg/congruence.hpp"

#include <algorithm>

#include "rbg/errors.hpp"
#include "rbg/primes.hpp"

namespace rbg {

CongruenceTower congruence_tower(std::int64_t q, int n_max, std::int64_t p,
                                 const EnumerationOptions& options) {
  require_prime(q, "congruence_tower (q)");
  require_prime(p, "congruence_tower (p)");
  if (q == p)
    throw PreconditionError("congruence level q must be a prime different from p");
  if (n_max < 1) throw PreconditionError("n_max must be at least 1");
  const PrimeClass pc = classify_prime(q);
  if (pc.cls == SplitType::Ramified)
    throw PreconditionError("q = 3 is ramified in Q(sqrt(-3)); no order formula is available");

  CongruenceTower t;
  t.q = q;
  t.p = p;
  t.kind = pc.good ? RingKind::Inert : RingKind::Split;
  t.scope_note =
      "indices are orders of finite reduction targets SU_3(O/q^k); the arithmetic group "
      "and its congruence subgroups are not constructed";

  // Levels 1..n_max are needed. Find the deepest one the ceiling allows.
  std::optional<FiniteGroupReport> enumerated;
  if (pc.good) {
    for (int level = n_max; level >= 1 && !enumerated; --level) {
      try {
        enumerated = enumerate_su3(q, level, options);
      } catch (const CeilingExceeded&) {
      }
    }
  }
  const FiniteGroupReport formula = su3_formula_report(q, n_max);

  for (int k = 0; k < n_max; ++k) {
    TowerStep s;
    s.k = k;
    const int enumerated_levels = enumerated ? enumerated->n : 0;
    if (k == 0) {
      s.index = enumerated ? enumerated->level_orders.front() : formula.level_orders.front();
    } else if (k + 1 <= enumerated_levels) {
      s.index = enumerated->reductions[k - 1].kernel_size;
    } else {
      s.index = formula.reductions[k - 1].kernel_size;
    }
    t.steps.push_back(s);
  }
  t.strictly_nested = std::all_of(t.steps.begin(), t.steps.end(),
                                  [](const TowerStep& s) { return s.index.value > 1; });
  return t;
}

}  // namespace rbg
