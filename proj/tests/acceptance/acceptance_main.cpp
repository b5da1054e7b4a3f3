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
#include <CLI11.hpp>

#include <iostream>
#include <set>

#include "rbg/verification_suite.hpp"

namespace {

rbg::CriterionResult run_one(int id) {
  using Fn = rbg::CriterionResult (*)();
  static const Fn table[] = {
      rbg::criterion_example_conditions, rbg::criterion_involution_suite,
      rbg::criterion_archimedean,        rbg::criterion_good_primes,
      rbg::criterion_ramanujan_certification, rbg::criterion_spectral_structure,
      rbg::criterion_finite_unitary_group,    rbg::criterion_tree_balls,
      rbg::criterion_quotient_contract};
  try {
    return table[id - 1]();
  } catch (const std::exception& e) {
    rbg::CriterionResult r;
    r.id = id;
    r.summary = std::string("exception: ") + e.what();
    return r;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> only;
  bool verbose = false;
  app.add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, 9));
  app.add_flag("-v,--verbose", verbose, "print JSON details");
  CLI11_PARSE(app, argc, argv);

  std::set<int> ids(only.begin(), only.end());
  if (ids.empty())
    for (int i = 1; i <= 9; ++i) ids.insert(i);

  int failed = 0;
  for (int id : ids) {
    const rbg::CriterionResult r = run_one(id);
    std::cout << "criterion " << id << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.title
              << ") " << r.summary << "\n";
    if (verbose) std::cout << r.details.dump(2) << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " passed\n";
  return failed == 0 ? 0 : 1;
}
