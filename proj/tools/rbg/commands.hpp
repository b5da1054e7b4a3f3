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

#include "rbg/report.hpp"

namespace rbg::cli {

// Stable exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

struct Outcome {
  std::string status;  // pass, fail, ok, inconclusive
  int exit_code = kExitPass;
  Json results;
  /// Replaces the JSON report on stdout when set (DOT export).
  std::optional<std::string> raw_output;
};

struct VerifyAlgebraArgs {
  std::string kind = "galois";
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::size_t count = 200;
  std::uint64_t seed = 1;
  std::int64_t witness_bound = kDefaultWitnessBound;
};
Outcome verify_algebra(const VerifyAlgebraArgs& args);

Outcome certify(const std::string& path, const std::string& format, double tolerance);
Outcome spectrum_cmd(const std::string& path, double tolerance);
Outcome expansion_cmd(const std::string& path, std::size_t ceiling);

struct TreeArgs {
  std::size_t l = 0, m = 0, radius = 0;
  std::string root = "l";
  bool include_graph = false;
  std::size_t ceiling = kDefaultTreeCeiling;
};
Outcome tree(const TreeArgs& args);

Outcome primes(std::optional<std::int64_t> up_to, std::optional<std::int64_t> classify);

struct FiniteGroupArgs {
  std::int64_t q = 2;
  int n = 1;
  bool closure = false;
  bool formula = false;
  unsigned threads = 0;
};
Outcome finite_group(const FiniteGroupArgs& args);

struct RandomBigraphArgs {
  std::size_t n1 = 0, n2 = 0, l = 0, m = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
};
Outcome random_bigraph(const RandomBigraphArgs& args);

Outcome tower(std::int64_t q, int n_max, std::int64_t p);
Outcome quotient_check(const std::string& path, std::int64_t p);
Outcome acceptance_suite();

}  // namespace rbg::cli
