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

#include <chrono>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "rbg/errors.hpp"

using rbg::Json;
namespace cli = rbg::cli;

namespace {

struct Invocation {
  std::string command;
  Json inputs = Json::object();
  std::function<cli::Outcome()> run;
};

int emit(const Invocation& inv, const cli::Outcome& out, double seconds, int indent) {
  if (out.raw_output) {
    std::cout << *out.raw_output;
  } else {
    std::cout << rbg::make_report(inv.command, inv.inputs, out.results, out.status, seconds).dump(indent)
              << "\n";
  }
  return out.exit_code;
}

int emit_error(const Invocation& inv, const std::string& status, const std::string& message,
               int code, double seconds, int indent) {
  std::cerr << "rbg " << inv.command << ": " << message << "\n";
  Json results{{"error", message}};
  std::cout << rbg::make_report(inv.command, inv.inputs, results, status, seconds).dump(indent) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rbg: Ramanujan bigraph and cyclic algebra toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool run_suite = false, compact = false;
  app.add_flag("--paper-suite", run_suite, "Run the full acceptance battery");
  app.add_flag("--compact", compact, "Single-line JSON output");

  Invocation inv;

  cli::VerifyAlgebraArgs va;
  auto* c_va = app.add_subcommand("verify-algebra", "Check the cyclic algebra conditions and involution identities");
  c_va->add_option("--kind", va.kind, "galois or nongalois")->check(CLI::IsMember({"galois", "nongalois"}));
  c_va->add_option("--a", va.a, "a in E as 'x' or 'x,y' meaning x + y*w (rationals allowed)");
  c_va->add_option("--b", va.b, "b in E for --kind nongalois");
  c_va->add_option("--count", va.count, "random elements in the involution suite")->check(CLI::PositiveNumber);
  c_va->add_option("--seed", va.seed, "seed for the involution suite");
  c_va->add_option("--witness-bound", va.witness_bound, "search witness primes below this bound");

  std::string graph_path, format = "json";
  double tolerance = rbg::kDefaultSpectralTolerance;
  auto* c_cert = app.add_subcommand("certify", "Ramanujan certificate for a graph file");
  c_cert->add_option("file", graph_path, "graph file")->required();
  c_cert->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  c_cert->add_option("--tolerance", tolerance, "spectral tolerance")->check(CLI::PositiveNumber);

  auto* c_spec = app.add_subcommand("spectrum", "Adjacency spectrum and structure of a graph file");
  c_spec->add_option("file", graph_path, "graph file")->required();
  c_spec->add_option("--tolerance", tolerance, "spectral tolerance")->check(CLI::PositiveNumber);

  std::size_t expansion_ceiling = rbg::kDefaultExpansionCeiling;
  auto* c_exp = app.add_subcommand("expansion", "Exact expansion coefficient by subset enumeration");
  c_exp->add_option("file", graph_path, "graph file")->required();
  c_exp->add_option("--ceiling", expansion_ceiling, "largest vertex count to enumerate");

  cli::TreeArgs ta;
  auto* c_tree = app.add_subcommand("tree", "Ball in the (l, m)-biregular tree");
  c_tree->add_option("--l", ta.l, "degree on the root side")->required();
  c_tree->add_option("--m", ta.m, "degree on the other side")->required();
  c_tree->add_option("--radius", ta.radius, "ball radius")->required();
  c_tree->add_option("--root", ta.root, "root degree: l or m")->check(CLI::IsMember({"l", "m"}));
  c_tree->add_flag("--include-graph", ta.include_graph, "embed the ball as a graph file");
  c_tree->add_option("--ceiling", ta.ceiling, "vertex ceiling");

  std::optional<std::int64_t> up_to, classify;
  auto* c_primes = app.add_subcommand("primes", "Good (inert) primes for Q(sqrt(-3))");
  c_primes->add_option("--up-to", up_to, "list good primes up to N");
  c_primes->add_option("--classify", classify, "classify one prime");

  cli::FiniteGroupArgs fa;
  auto* c_fg = app.add_subcommand("finite-group", "Order of SU_3(O/q^n)");
  c_fg->add_option("--q", fa.q, "prime q")->required();
  c_fg->add_option("--n", fa.n, "level")->check(CLI::PositiveNumber);
  c_fg->add_flag("--closure", fa.closure, "full group-axiom check on the enumerated set");
  c_fg->add_flag("--formula", fa.formula, "use the classical order formulas instead of enumeration");
  c_fg->add_option("--threads", fa.threads, "worker threads (0 = all cores)");

  cli::RandomBigraphArgs ra;
  auto* c_rand = app.add_subcommand("random-bigraph", "Seeded random biregular bipartite graph");
  c_rand->add_option("--n1", ra.n1, "vertices of degree l")->required();
  c_rand->add_option("--n2", ra.n2, "vertices of degree m")->required();
  c_rand->add_option("--l", ra.l, "degree on side 1")->required();
  c_rand->add_option("--m", ra.m, "degree on side 2")->required();
  c_rand->add_option("--seed", ra.seed, "random seed (mandatory)")->required();
  c_rand->add_option("--output", ra.output, "also write the graph file here");

  std::int64_t tq = 2, tp = 5;
  int tn = 2;
  auto* c_tower = app.add_subcommand("tower", "Indices in the congruence tower Gamma(q^k)");
  c_tower->add_option("--q", tq, "congruence prime q")->required();
  c_tower->add_option("--n-max", tn, "number of steps")->check(CLI::PositiveNumber);
  c_tower->add_option("--p", tp, "the good prime p (must differ from q)");

  std::int64_t qp = 2;
  auto* c_quot = app.add_subcommand("quotient-check", "Bidegree and handshake check for a candidate quotient graph");
  c_quot->add_option("file", graph_path, "graph file")->required();
  c_quot->add_option("--p", qp, "prime p; bidegree (p^3+1, p+1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (run_suite) {
    if (!app.get_subcommands().empty()) {
      std::cerr << "rbg: --paper-suite does not take a subcommand\n";
      return cli::kExitUsage;
    }
    inv = {"paper-suite", Json::object(), cli::acceptance_suite};
  } else if (c_va->parsed()) {
    inv = {"verify-algebra", Json{{"kind", va.kind}, {"count", va.count}, {"seed", va.seed},
                                  {"witness_bound", va.witness_bound}},
           [&] { return cli::verify_algebra(va); }};
    if (va.a) inv.inputs["a"] = *va.a;
    if (va.b) inv.inputs["b"] = *va.b;
  } else if (c_cert->parsed()) {
    inv = {"certify", Json{{"file", graph_path}, {"format", format}, {"tolerance", tolerance}},
           [&] { return cli::certify(graph_path, format, tolerance); }};
  } else if (c_spec->parsed()) {
    inv = {"spectrum", Json{{"file", graph_path}, {"tolerance", tolerance}},
           [&] { return cli::spectrum_cmd(graph_path, tolerance); }};
  } else if (c_exp->parsed()) {
    inv = {"expansion", Json{{"file", graph_path}, {"ceiling", expansion_ceiling}},
           [&] { return cli::expansion_cmd(graph_path, expansion_ceiling); }};
  } else if (c_tree->parsed()) {
    inv = {"tree", Json{{"l", ta.l}, {"m", ta.m}, {"radius", ta.radius}, {"root", ta.root}},
           [&] { return cli::tree(ta); }};
  } else if (c_primes->parsed()) {
    inv = {"primes", Json::object(), [&] { return cli::primes(up_to, classify); }};
    if (up_to) inv.inputs["up_to"] = *up_to;
    if (classify) inv.inputs["classify"] = *classify;
  } else if (c_fg->parsed()) {
    inv = {"finite-group", Json{{"q", fa.q}, {"n", fa.n}, {"closure", fa.closure}, {"formula", fa.formula}},
           [&] { return cli::finite_group(fa); }};
  } else if (c_rand->parsed()) {
    inv = {"random-bigraph",
           Json{{"n1", ra.n1}, {"n2", ra.n2}, {"l", ra.l}, {"m", ra.m}, {"seed", ra.seed}},
           [&] { return cli::random_bigraph(ra); }};
  } else if (c_tower->parsed()) {
    inv = {"tower", Json{{"q", tq}, {"n_max", tn}, {"p", tp}}, [&] { return cli::tower(tq, tn, tp); }};
  } else if (c_quot->parsed()) {
    inv = {"quotient-check", Json{{"file", graph_path}, {"p", qp}},
           [&] { return cli::quotient_check(graph_path, qp); }};
  } else {
    std::cerr << app.help();
    return cli::kExitUsage;
  }

  const int indent = compact ? -1 : 2;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    const cli::Outcome out = inv.run();
    return emit(inv, out, elapsed(), indent);
  } catch (const rbg::ParseError& e) {
    return emit_error(inv, "parse_error", e.what(), cli::kExitUsage, elapsed(), indent);
  } catch (const rbg::CeilingExceeded& e) {
    return emit_error(inv, "precondition_failed",
                      std::string(e.what()) + " (would be " + std::to_string(e.would_be()) + ")",
                      cli::kExitPrecondition, elapsed(), indent);
  } catch (const rbg::PreconditionError& e) {
    return emit_error(inv, "precondition_failed", e.what(), cli::kExitPrecondition, elapsed(), indent);
  } catch (const std::invalid_argument& e) {
    return emit_error(inv, "usage_error", e.what(), cli::kExitUsage, elapsed(), indent);
  } catch (const std::exception& e) {
    return emit_error(inv, "internal_error", e.what(), cli::kExitInternal, elapsed(), indent);
  }
}
