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

#include <stdexcept>
#include <string>

namespace rbg {

// Input violates an operation's documented precondition (wrong prime class,
// disconnected graph, size ceiling, ...). The CLI maps these to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration or construction would exceed its configured
// ceiling. Carries the would-be size so callers can report it.
class CeilingExceeded : public PreconditionError {
 public:
  CeilingExceeded(const std::string& what, unsigned long long would_be)
      : PreconditionError(what), would_be_(would_be) {}
  unsigned long long would_be() const noexcept { return would_be_; }

 private:
  unsigned long long would_be_;
};

// An internal cross-check failed: a result that must lie in a subfield did
// not, two independent routes disagreed, and so on. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed external input (graph files, numeric literals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rbg
