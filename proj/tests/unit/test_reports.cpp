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
#include <doctest.h>

#include "rbg/generators.hpp"
#include "rbg/report.hpp"
#include "rbg/spectrum.hpp"
#include "rbg/unitary_groups.hpp"

using namespace rbg;

TEST_CASE("tagged values") {
  const Json a = tagged(Integer("123456789012345678901234567890"), Method::Formula);
  CHECK(a["value"] == "123456789012345678901234567890");
  CHECK(a["method"] == "formula");
  CHECK_FALSE(a.contains("tolerance"));
  const Json r = tagged(Rational(2, 3));
  CHECK(r["value"] == "2/3");
  CHECK(r["method"] == "exact");
  const Json f = tagged_float(1.5, 1e-9);
  CHECK(f["method"] == "floating");
  CHECK(f["tolerance"].get<double>() == doctest::Approx(1e-9));
  CHECK(tagged_size(28)["method"] == "exact");
}

TEST_CASE("report envelope") {
  const Json rep = make_report("spectrum", Json{{"file", "x"}}, Json::object(), "ok", 0.25);
  CHECK(rep["schema_version"] == "1");
  CHECK(rep["command"] == "spectrum");
  CHECK(rep["status"] == "ok");
  CHECK(rep["inputs"]["file"] == "x");
  CHECK(rep["duration_seconds"].get<double>() == doctest::Approx(0.25));
}

TEST_CASE("domain objects serialize with provenance") {
  const Json cert = to_json(certify_ramanujan(complete_bipartite(4, 4)));
  CHECK(cert.contains("lambda"));
  CHECK(cert["lambda"]["method"] == "floating");
  const Json g = to_json(enumerate_su3(2, 1));
  CHECK(g["order"]["method"] == "enumerated");
  CHECK(g.dump().find("216") != std::string::npos);
  const Json f = to_json(su3_formula_report(7, 1));
  CHECK(f["order"]["method"] == "formula");
  CHECK(f["candidates_examined"].is_null());
}
