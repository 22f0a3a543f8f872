// Copyright 2026 The zxalg Authors
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

// Command-line front end: evaluation, synthesis, normalization, equality,
// rule and lemma checking, derivation checking and rendering.
//
// Exit status: 0 success, 1 a negative answer or a failed check, 2 bad usage
// or malformed input.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zxalg/error.hpp"
#include "zxalg/interp.hpp"
#include "zxalg/io.hpp"
#include "zxalg/normalform.hpp"
#include "zxalg/render.hpp"
#include "zxalg/rewrite.hpp"
#include "zxalg/rules.hpp"

namespace {

using namespace zxalg;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// A diagram argument names a file when one exists at that path ("@path"
// forces it); otherwise it is the term itself.
std::string term_text(const std::string& arg) {
  if (arg.rfind('@', 0) == 0) return read_file(arg.substr(1));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

Regime parse_regime(const std::string& s) {
  if (s == "ring") return Regime::ring;
  if (s == "semiring") return Regime::semiring;
  throw DomainError("regime must be 'ring' or 'semiring', got '" + s + "'");
}

void print_report(const SoundnessReport& rep, bool verbose) {
  std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.name << " (" << rep.instances.size() << " instances";
  if (!rep.passed()) std::cout << ", " << rep.failures() << " failing";
  std::cout << ")\n";
  for (const InstanceResult& inst : rep.instances)
    if (!inst.passed || verbose)
      std::cout << "  " << (inst.passed ? "ok   " : "fail ") << inst.params
                << (inst.detail.empty() ? "" : ": " + inst.detail) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxalg: ZX diagrams over commutative rings and semirings"};
  app.require_subcommand(1);
  std::string ring_text = "int";
  int bound = default_arity_bound();

  auto add_ring = [&](CLI::App* cmd) { cmd->add_option("--ring", ring_text, "int, nat, bool, mod:N, tropical, poly-int:a,b, poly-nat:a,b"); };

  std::string term_a, term_b, matrix_file, script_file, fixture_file, rule_name, vector_text;
  std::string regime_text = "ring";
  bool parts = false, verbose = false, parallel = false, semantic = false, no_clusters = false;

  auto* eval = app.add_subcommand("eval", "Print the matrix of a diagram");
  add_ring(eval);
  eval->add_option("diagram", term_a, "Diagram file or term")->required();

  auto* synth = app.add_subcommand("synth", "Synthesize a diagram for a matrix or vector");
  add_ring(synth);
  auto* synth_src = synth->add_option_group("source");
  synth_src->add_option("matrix,--matrix", matrix_file, "Matrix file");
  synth_src->add_option("--vector", vector_text, "Whitespace-separated state entries");
  synth_src->require_option(1);
  synth->add_flag("--parts", parts, "List the normal-form pieces of a state");

  auto* norm = app.add_subcommand("normalize", "Rewrite a diagram into normal form");
  add_ring(norm);
  norm->add_option("diagram", term_a, "Diagram file or term")->required();

  auto* eq = app.add_subcommand("equal", "Decide semantic equality of two diagrams");
  add_ring(eq);
  eq->add_option("lhs", term_a, "Diagram file or term")->required();
  eq->add_option("rhs", term_b, "Diagram file or term")->required();

  auto* rules = app.add_subcommand("check-rules", "Check the soundness of the rule catalog");
  auto* rules_regime = rules->add_option("--regime", regime_text, "ring or semiring (default: from --ring)");
  auto* rules_ring = rules->add_option("--ring", ring_text, "Ring to check over (default: symbolic)");
  rules->add_option("--rule", rule_name, "Check a single rule");
  rules->add_option("--arity-bound", bound, "Largest schema arity (ZXALG_ARITY_BOUND)")->check(CLI::Range(0, 8));
  rules->add_flag("--parallel", parallel, "Check rules concurrently");
  rules->add_flag("-v,--verbose", verbose, "Show every instance");

  auto* lemmas = app.add_subcommand("lemmas", "Check derived equalities");
  auto* lemmas_regime = lemmas->add_option("--regime", regime_text, "ring or semiring (default: from --ring)");
  auto* lemmas_ring = lemmas->add_option("--ring", ring_text, "Ring to check over (default: symbolic)");
  lemmas->add_option("--file", fixture_file, "Equation fixture file instead of the built-in suite");
  lemmas->add_option("--arity-bound", bound, "Largest schema arity (ZXALG_ARITY_BOUND)")->check(CLI::Range(0, 8));
  lemmas->add_flag("-v,--verbose", verbose, "Show every instance");

  auto* derive = app.add_subcommand("derive", "Check a derivation script");
  add_ring(derive);
  derive->add_option("script", script_file, "Derivation script")->required();
  derive->add_flag("--semantic", semantic, "Accept steps justified by evaluation");

  auto* render = app.add_subcommand("render", "Emit Graphviz DOT");
  add_ring(render);
  auto* render_src = render->add_option_group("source");
  render_src->add_option("diagram", term_a, "Diagram file or term");
  render_src->add_option("--from-matrix", matrix_file, "Render the normal form of a matrix file");
  render_src->require_option(1);
  render->add_flag("--no-clusters", no_clusters, "Do not group normal-form pieces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      Ring ring = Ring::parse(ring_text);
      std::cout << format_matrix(ring, evaluate(parse_diagram(term_text(term_a), ring), ring));
      return kOk;
    }
    if (*synth) {
      Ring ring = Ring::parse(ring_text);
      DenseMatrix m;
      if (!matrix_file.empty()) {
        m = parse_matrix(read_file(matrix_file), ring);
      } else {
        std::istringstream in(vector_text);
        std::vector<Element> entries;
        for (std::string tok; in >> tok;) entries.push_back(ring.parse_element(tok));
        m = DenseMatrix::column(std::move(entries));
      }
      if (parts) {
        if (m.cols() != 1) throw DomainError("--parts needs a state (one column)");
        NormalForm nf = normal_form(ring, m.entries());
        for (const auto& [label, d] : nf.parts) std::cout << label << ": " << format_diagram(d, ring) << "\n";
        return kOk;
      }
      std::cout << format_diagram(synthesize_map(ring, m), ring) << "\n";
      return kOk;
    }
    if (*norm) {
      Ring ring = Ring::parse(ring_text);
      std::cout << format_diagram(normalize(parse_diagram(term_text(term_a), ring), ring), ring) << "\n";
      return kOk;
    }
    if (*eq) {
      Ring ring = Ring::parse(ring_text);
      EqualityVerdict v = diagram_equal(parse_diagram(term_text(term_a), ring), parse_diagram(term_text(term_b), ring), ring);
      std::cout << (v.equal ? "equal" : "not equal: " + v.reason) << "\n";
      return v.equal ? kOk : kNegative;
    }
    if (*rules || *lemmas) {
      bool explicit_ring = *rules ? rules_ring->count() > 0 : lemmas_ring->count() > 0;
      bool explicit_regime = *rules ? rules_regime->count() > 0 : lemmas_regime->count() > 0;
      Regime regime = explicit_ring && !explicit_regime ? Ring::parse(ring_text).regime() : parse_regime(regime_text);
      Ring ring = explicit_ring ? Ring::parse(ring_text) : symbolic_ring(regime);
      std::vector<SoundnessReport> reports;
      if (*rules) {
        if (!rule_name.empty()) {
          auto rule = find_rule(regime, rule_name);
          if (!rule) throw DomainError("no rule '" + rule_name + "' in the " + std::string(to_string(regime)) + " catalog");
          reports.push_back(check_soundness(*rule, ring, bound));
        } else {
          reports = check_catalog(regime, ring, bound, parallel);
        }
      } else if (!fixture_file.empty()) {
        for (const EquationFixture& f : parse_fixtures(read_file(fixture_file), ring)) {
          EqualityVerdict v = diagram_equal(f.lhs, f.rhs, ring);
          reports.push_back({f.name, ring.name(), {{"-", v.equal, v.reason}}});
        }
      } else {
        reports = run_lemma_suite(regime, ring, bound);
      }
      std::size_t failed = 0;
      for (const SoundnessReport& rep : reports) {
        print_report(rep, verbose);
        if (!rep.passed()) ++failed;
      }
      std::cout << reports.size() - failed << "/" << reports.size() << " passed\n";
      return failed == 0 ? kOk : kNegative;
    }
    if (*derive) {
      Ring ring = Ring::parse(ring_text);
      Derivation d = parse_derivation(read_file(script_file), ring);
      DerivationReport rep = check_derivation(d, ring, semantic ? DerivationMode::semantic : DerivationMode::syntactic);
      if (rep.ok) {
        std::cout << "valid (" << d.steps.size() << " steps)\n";
        return kOk;
      }
      const DerivationStep& step = d.steps[rep.failed_step - 1];
      std::cout << "invalid at step " << rep.failed_step << " (line " << step.line << "): " << rep.reason << "\n";
      return kNegative;
    }
    if (*render) {
      Ring ring = Ring::parse(ring_text);
      RenderOptions options;
      options.cluster_parts = !no_clusters;
      if (!matrix_file.empty()) {
        DenseMatrix m = parse_matrix(read_file(matrix_file), ring);
        if (m.cols() == 1) {
          std::cout << render_dot(normal_form(ring, m.entries()), ring, options);
        } else {
          std::cout << render_dot(synthesize_map(ring, m), ring, options);
        }
      } else {
        std::cout << render_dot(parse_diagram(term_text(term_a), ring), ring, options);
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
