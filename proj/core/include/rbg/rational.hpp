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

#include <gmpxx.h>

#include <string>

namespace rbg {

// Arbitrary precision integers and rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n", "-n" or "n/d". Throws ParseError on malformed input or a zero
// denominator.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace rbg
