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
#include "rbg/primes.hpp"

#include "rbg/errors.hpp"

namespace rbg {

bool mod12_says_inert(std::int64_t p) { return p % 12 == 5 || p % 12 == 11; }

PrimeClass classify_prime(std::int64_t p) {
  require_prime(p, "classify_prime");
  PrimeClass c;
  c.p = p;
  c.cls = splitting_data(p).type;
  c.good = c.cls == SplitType::Inert;
  if (p > 3 && c.good != mod12_says_inert(p))
    throw ConsistencyError("prime " + std::to_string(p) +
                           ": square search disagrees with the mod-12 rule");
  return c;
}

std::vector<std::int64_t> good_primes_up_to(std::int64_t bound) {
  if (bound < 2) throw PreconditionError("good_primes_up_to needs a bound of at least 2");
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= bound; ++p)
    if (is_prime(p) && classify_prime(p).good) out.push_back(p);
  return out;
}

}  // namespace rbg
