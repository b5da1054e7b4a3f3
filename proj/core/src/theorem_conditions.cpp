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
#include "rbg/theorem_conditions.hpp"

#include "rbg/errors.hpp"

namespace rbg {

std::string to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Verified: return "verified";
    case ClauseStatus::Refuted: return "refuted";
    case ClauseStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

ConditionReport check_theorem_conditions(const AlgebraParams& params, std::int64_t witness_bound,
                                         int precision) {
  if (params.kind() != AlgebraKind::GaloisC6)
    throw PreconditionError("theorem conditions apply to the Galois (C6) kind only");
  ConditionReport r;
  r.a = params.a();
  const QuadElem& a = params.a();

  r.norm_E_over_Q = a * a.conj();
  r.unitary_constant = r.norm_E_over_Q == QuadElem(1);
  r.galois_commute = galois_actions_commute();

  if (a.is_zero()) {
    r.division = ClauseStatus::Refuted;
    r.division_reason = "a = 0 is not a unit";
    return r;
  }
  const QuadElem a2 = a * a;
  if (auto c = cube_root_in_E(a)) {
    r.division = ClauseStatus::Refuted;
    r.division_reason = "a = (" + c->str() + ")^3 is the norm of an element of E";
    return r;
  }
  if (auto c = cube_root_in_E(a2)) {
    r.division = ClauseStatus::Refuted;
    r.division_reason = "a^2 = (" + c->str() + ")^3 is the norm of an element of E";
    return r;
  }

  for (std::int64_t p = 2; p < witness_bound; ++p) {
    if (!is_obstruction_witness_candidate(p)) continue;
    r.searched_primes.push_back(p);
    ObstructionReport oa = local_norm_obstruction(a, p, precision);
    ObstructionReport oa2 = local_norm_obstruction(a2, p, precision);
    if (oa.obstructed && oa2.obstructed) {
      r.division = ClauseStatus::Verified;
      r.division_reason = "local valuation obstruction at p = " + std::to_string(p);
      r.witness_a = std::move(oa);
      r.witness_a2 = std::move(oa2);
      return r;
    }
  }
  r.division = ClauseStatus::Inconclusive;
  r.division_reason = "no obstructing witness prime below " + std::to_string(witness_bound);
  return r;
}

}  // namespace rbg
