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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rbg/cyclic_algebra.hpp"
#include "rbg/report.hpp"

namespace rbg {

/// Failure counts of the involution identities over seeded random elements.
struct InvolutionSuiteResult {
  AlgebraKind kind = AlgebraKind::GaloisC6;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t involutive_failures = 0;         // alpha^2 = id
  std::size_t anti_multiplicative_failures = 0;  // alpha(de) = alpha(e) alpha(d)
  std::size_t restricts_to_tau_failures = 0;   // alpha|_E = tau
  std::size_t norm_compatibility_failures = 0;  // N(alpha(d)) = tau(N(d))
  std::size_t norm_determinant_failures = 0;   // N = det of the matrix form

  bool passed() const {
    return involutive_failures + anti_multiplicative_failures + restricts_to_tau_failures +
               norm_compatibility_failures + norm_determinant_failures ==
           0;
  }
};

InvolutionSuiteResult run_involution_suite(const AlgebraParams& params, std::size_t samples,
                                           std::uint64_t seed);
Json to_json(const InvolutionSuiteResult& r);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  Json details;
  double seconds = 0.0;
};
Json to_json(const CriterionResult& r);

/// The acceptance battery, one function per criterion.
CriterionResult criterion_example_conditions();    // 1
CriterionResult criterion_involution_suite();      // 2
CriterionResult criterion_archimedean();           // 3
CriterionResult criterion_good_primes();           // 4
CriterionResult criterion_ramanujan_certification();  // 5
CriterionResult criterion_spectral_structure();    // 6
CriterionResult criterion_finite_unitary_group();  // 7
CriterionResult criterion_tree_balls();            // 8
CriterionResult criterion_quotient_contract();     // 9

/// Runs the criteria in order. on_result, when set, sees each result as soon
/// as it is available.
std::vector<CriterionResult> run_acceptance_suite(
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace rbg
