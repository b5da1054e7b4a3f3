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

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "rbg/congruence.hpp"
#include "rbg/covering.hpp"
#include "rbg/expansion.hpp"
#include "rbg/number_fields.hpp"
#include "rbg/primes.hpp"
#include "rbg/provenance.hpp"
#include "rbg/spectrum.hpp"
#include "rbg/structure.hpp"
#include "rbg/theorem_conditions.hpp"
#include "rbg/tree_ball.hpp"
#include "rbg/unitary_groups.hpp"

namespace rbg {

using Json = nlohmann::json;

inline constexpr const char* kReportSchemaVersion = "1";

/// {"value": v, "method": m} plus "tolerance" for floating values. Integers
/// that do not fit in 64 bits and all rationals are rendered as strings.
Json tagged(const Integer& v, Method m = Method::Exact);
Json tagged(const Rational& v, Method m = Method::Exact);
Json tagged(std::int64_t v, Method m = Method::Exact);
Json tagged(std::uint64_t v, Method m = Method::Exact);
Json tagged_size(std::size_t v, Method m = Method::Exact);
Json tagged_float(double v, double tolerance);
Json tagged(const TaggedCount& c);

Json to_json(const QuadElem& e);
Json to_json(const ObstructionReport& r);
Json to_json(const ConditionReport& r);
Json to_json(const Spectrum& s);
Json to_json(const BiregularProfile& p);
Json to_json(const StructureReport& s);
Json to_json(const RamanujanCertificate& c);
Json to_json(const ExpansionReport& r);
Json to_json(const TreeBall& b, bool include_graph);
Json to_json(const PrimeClass& c);
Json to_json(const ClosureCheck& c);
Json to_json(const FiniteGroupReport& r);
Json to_json(const CongruenceTower& t);

/// Report envelope: command, inputs, results, status, duration, and the
/// scope note for anything touching arithmetic groups.
Json make_report(const std::string& command, Json inputs, Json results, const std::string& status,
                 double seconds);

}  // namespace rbg
