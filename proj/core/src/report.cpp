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
#include "rbg/report.hpp"

#include <limits>

#include "rbg/graph_io.hpp"

namespace rbg {

namespace {

Json method_only(Method m) { return Json{{"method", to_string(m)}}; }

Json integer_value(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json verdict(const std::optional<DefinitionVerdict>& v, double tol) {
  if (!v) return nullptr;
  return Json{{"passed", v->passed}, {"margin", tagged_float(v->margin, tol)}};
}

}  // namespace

Json tagged(const Integer& v, Method m) {
  Json j = method_only(m);
  j["value"] = integer_value(v);
  return j;
}

Json tagged(const Rational& v, Method m) {
  if (v.get_den() == 1) return tagged(Integer(v.get_num()), m);
  Json j = method_only(m);
  j["value"] = v.get_str();
  return j;
}

Json tagged(std::int64_t v, Method m) {
  Json j = method_only(m);
  j["value"] = v;
  return j;
}

Json tagged(std::uint64_t v, Method m) {
  Json j = method_only(m);
  j["value"] = v;
  return j;
}

Json tagged_size(std::size_t v, Method m) { return tagged(static_cast<std::uint64_t>(v), m); }

Json tagged_float(double v, double tolerance) {
  Json j = method_only(Method::Floating);
  j["value"] = v;
  j["tolerance"] = tolerance;
  return j;
}

Json tagged(const TaggedCount& c) { return tagged(c.value, c.method); }

Json to_json(const QuadElem& e) {
  return Json{{"text", e.str()}, {"x", tagged(e.x())}, {"y", tagged(e.y())}};
}

Json to_json(const ObstructionReport& r) {
  Json vals = Json::array(), mods = Json::array();
  for (long v : r.valuations) vals.push_back(tagged(static_cast<std::int64_t>(v)));
  for (int v : r.valuations_mod_3) mods.push_back(tagged(static_cast<std::int64_t>(v)));
  return Json{{"prime", tagged(r.prime)},
              {"split_type_in_E", to_string(r.split_type_in_E)},
              {"residue_degree_in_L", tagged(static_cast<std::int64_t>(r.residue_degree_in_L))},
              {"precision", r.precision},
              {"omega_root", tagged(r.omega_root)},
              {"valuations", vals},
              {"valuation_residues_mod_3", mods},
              {"obstructed", r.obstructed}};
}

Json to_json(const ConditionReport& r) {
  Json primes = Json::array();
  for (auto p : r.searched_primes) primes.push_back(p);
  Json div{{"status", to_string(r.division)}, {"reason", r.division_reason},
           {"searched_primes", primes}};
  div["witness_a"] = r.witness_a ? to_json(*r.witness_a) : Json(nullptr);
  div["witness_a_squared"] = r.witness_a2 ? to_json(*r.witness_a2) : Json(nullptr);
  return Json{{"a", to_json(r.a)},
              {"condition_i_division", div},
              {"condition_ii_unitary",
               {{"holds", r.unitary_constant}, {"norm_E_over_Q", to_json(r.norm_E_over_Q)}}},
              {"condition_iii_commuting", {{"holds", r.galois_commute}}},
              {"all_verified", r.all_verified()}};
}

Json to_json(const Spectrum& s) {
  Json vals = Json::array();
  for (double v : s.values) vals.push_back(v);
  return Json{{"values", vals},
              {"method", to_string(Method::Floating)},
              {"tolerance", s.tolerance},
              {"zero_count", tagged_size(s.count_zeros(), Method::Floating)},
              {"symmetric", s.is_symmetric()}};
}

Json to_json(const BiregularProfile& p) {
  return Json{{"n1", tagged_size(p.n1)}, {"n2", tagged_size(p.n2)},
              {"l", tagged_size(p.l)},   {"m", tagged_size(p.m)}};
}

Json to_json(const StructureReport& s) {
  Json j{{"connected", s.connected},
         {"bipartite", s.bipartition.has_value()},
         {"classification", to_string(s.classification())}};
  j["regular_degree"] = s.regular ? tagged_size(s.regular->k) : Json(nullptr);
  j["biregular"] = s.biregular ? to_json(*s.biregular) : Json(nullptr);
  return j;
}

Json to_json(const RamanujanCertificate& c) {
  const double tol = c.tolerance;
  Json j{{"graph_class", to_string(c.graph_class)},
         {"degree", tagged_size(c.k)},
         {"lambda", tagged_float(c.lambda, tol)},
         {"lower_bound", tagged_float(c.lower_bound, tol)},
         {"upper_bound", tagged_float(c.upper_bound, tol)},
         {"regular_definition", verdict(c.regular_definition, tol)},
         {"feng_li_window", verdict(c.feng_li_window, tol)},
         {"hashimoto_form", verdict(c.hashimoto_form, tol)},
         {"ramanujan", c.ramanujan},
         {"definitions_agree", c.definitions_agree},
         {"spectrum", to_json(c.spectrum)}};
  j["profile"] = c.profile ? to_json(*c.profile) : Json(nullptr);
  return j;
}

Json to_json(const ExpansionReport& r) {
  Json j{{"coefficient", tagged(r.coefficient, Method::Enumerated)},
         {"minimizing_subset", r.minimizing_subset}};
  const double tol = kDefaultSpectralTolerance;
  j["lambda"] = r.lambda ? tagged_float(*r.lambda, tol) : Json(nullptr);
  j["one_minus_lambda_over_k"] =
      r.one_minus_lambda_over_k ? tagged_float(*r.one_minus_lambda_over_k, tol) : Json(nullptr);
  j["twice_coefficient"] =
      r.twice_coefficient ? tagged(*r.twice_coefficient, Method::Enumerated) : Json(nullptr);
  return j;
}

Json to_json(const TreeBall& b, bool include_graph) {
  Json counts = Json::array();
  for (auto c : b.level_counts) counts.push_back(tagged_size(c, Method::Enumerated));
  Json j{{"l", tagged_size(b.l)},
         {"m", tagged_size(b.m)},
         {"radius", tagged_size(b.radius)},
         {"root_side", b.root_side == RootSide::DegreeL ? "l" : "m"},
         {"vertex_count", tagged_size(b.graph.vertex_count(), Method::Enumerated)},
         {"edge_count", tagged_size(b.graph.edge_count(), Method::Enumerated)},
         {"level_counts", counts},
         {"valid", validate_tree_ball(b)}};
  if (include_graph) j["graph"] = graph_to_json(b.graph);
  return j;
}

Json to_json(const PrimeClass& c) {
  return Json{{"p", tagged(c.p)}, {"class", to_string(c.cls)}, {"good", c.good}};
}

Json to_json(const ClosureCheck& c) {
  return Json{{"contains_identity", c.contains_identity},
              {"closed_under_products", c.closed_under_products},
              {"closed_under_inverses", c.closed_under_inverses},
              {"products_checked", tagged(c.products_checked, Method::Enumerated)},
              {"passed", c.passed()}};
}

Json to_json(const FiniteGroupReport& r) {
  Json levels = Json::array();
  for (std::size_t k = 0; k < r.level_orders.size(); ++k)
    levels.push_back(Json{{"level", k + 1}, {"order", tagged(r.level_orders[k])}});
  Json reds = Json::array();
  for (const auto& red : r.reductions)
    reds.push_back(Json{{"from_level", red.from_level},
                        {"to_level", red.to_level},
                        {"kernel_size", tagged(red.kernel_size)},
                        {"image_size", tagged(red.image_size)},
                        {"surjective", red.surjective},
                        {"orders_consistent", red.orders_consistent}});
  Json j{{"q", tagged(r.q)},
         {"n", r.n},
         {"ring_kind", to_string(r.kind)},
         {"order", tagged(r.order)},
         {"level_orders", levels},
         {"reductions", reds},
         {"candidates_examined", r.order.method == Method::Enumerated
                                     ? tagged(r.candidates_examined, Method::Enumerated)
                                     : Json(nullptr)}};
  j["formula_order"] = r.formula_order ? tagged(*r.formula_order) : Json(nullptr);
  j["closure"] = r.closure ? to_json(*r.closure) : Json(nullptr);
  return j;
}

Json to_json(const CongruenceTower& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back(Json{{"k", s.k},
                         {"subgroups", "[Gamma(q^" + std::to_string(s.k) + ") : Gamma(q^" +
                                           std::to_string(s.k + 1) + ")]"},
                         {"index", tagged(s.index)}});
  return Json{{"q", tagged(t.q)},          {"p", tagged(t.p)},
              {"ring_kind", to_string(t.kind)}, {"steps", steps},
              {"strictly_nested", t.strictly_nested}, {"scope_note", t.scope_note}};
}

Json make_report(const std::string& command, Json inputs, Json results, const std::string& status,
                 double seconds) {
  return Json{{"schema_version", kReportSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"status", status},
              {"duration_seconds", seconds}};
}

}  // namespace rbg
