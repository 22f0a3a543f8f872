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

#pragma once

// Rewrite-rule catalogs for the ring and semiring calculi, instantiation of
// rule schemas, and the soundness checker that evaluates both sides.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zxalg/algebra.hpp"
#include "zxalg/diagram.hpp"

namespace zxalg {

/// Schema bound for arity parameters: ZXALG_ARITY_BOUND when set, else 3.
int default_arity_bound();

/// An integer parameter of a schema. Arity parameters range over
/// [min, arity_bound]; discrete ones (the 0/pi phases of red spiders, subset
/// masks) over the fixed [min, max].
struct IntParam {
  std::string name;
  int min = 0;
  int max = 0;
  bool arity = true;
};

struct Bindings {
  std::map<std::string, int> integers;
  std::map<std::string, Element> phases;
};

using SchemaBuilder = std::function<std::pair<Diagram, Diagram>(const Ring&, const Bindings&)>;

/// A named equation between two diagram templates.
struct Schema {
  std::string name;
  std::vector<IntParam> int_params;
  std::vector<std::string> phase_vars;
  SchemaBuilder build;
};

struct RewriteRule {
  Schema schema;
  std::string base_name;
  bool flipped = false;
  /// Needs negatives (H, T^-1, or negative constants).
  bool ring_only = false;

  const std::string& name() const { return schema.name; }
};

/// Suffix naming the upside-down version of a rule.
inline constexpr std::string_view kFlipSuffix = "-flip";

/// The rule set of a regime, each rule followed by its flipped twin.
const std::vector<RewriteRule>& catalog(Regime regime);
/// Catalog lookup by name (flips included); nullopt when absent.
std::optional<RewriteRule> find_rule(Regime regime, std::string_view name);

/// Closed (lhs, rhs) for the given bindings. DomainError on unbound or
/// out-of-range parameters; RegimeError for ring-only rules over semirings.
std::pair<Diagram, Diagram> instantiate(const RewriteRule& rule, const Ring& ring, const Bindings& bindings,
                                        int arity_bound = default_arity_bound());
std::pair<Diagram, Diagram> instantiate(const Schema& schema, const Ring& ring, const Bindings& bindings,
                                        int arity_bound = default_arity_bound());

/// Every assignment of the schema's integer parameters within bounds.
std::vector<std::map<std::string, int>> enumerate_int_params(const Schema& schema, int arity_bound);

struct InstanceResult {
  std::string params;
  bool passed = false;
  /// Counterexample or error text for failures.
  std::string detail;
};

struct SoundnessReport {
  std::string name;
  std::string ring;
  std::vector<InstanceResult> instances;

  bool passed() const;
  std::size_t failures() const;
};

struct SoundnessOptions {
  /// Random phase assignments per instance when `ring` is not polynomial.
  int samples = 4;
  std::uint64_t seed = 0x5eed;
};

/// Checks a schema by evaluation. Over a polynomial ring, phase variables are
/// bound to indeterminates (the ring's own when it declares them, otherwise a
/// fresh polynomial ring of the same regime named after the schema's
/// variables); over any other ring they are sampled.
SoundnessReport check_schema(const Schema& schema, const Ring& ring, int arity_bound,
                             const SoundnessOptions& options = {});
SoundnessReport check_soundness(const RewriteRule& rule, const Ring& ring, int arity_bound = default_arity_bound(),
                                const SoundnessOptions& options = {});
/// All rules of a regime, one report per rule in catalog order. `parallel`
/// fans the rules out over std::async.
std::vector<SoundnessReport> check_catalog(Regime regime, const Ring& ring, int arity_bound,
                                           bool parallel = false, const SoundnessOptions& options = {});

/// Default symbolic ring of a regime: poly-int or poly-nat over no variables;
/// check_schema extends it per rule.
Ring symbolic_ring(Regime regime);

// Named constructions shared by the catalog and the lemma suite.

/// Addition node 2 -> 1, [[1,0,0,0],[0,1,1,0]], from semiring generators:
/// |z> with z = x xor y, kept only when x <= z and y <= z.
Diagram addition_node(const Ring& ring);

// ---------------------------------------------------------------------------
// Lemma fixtures

enum class FixtureScope { ring, semiring, both };

struct LemmaFixture {
  Schema schema;
  FixtureScope scope = FixtureScope::both;
  /// Where the equality is stated: "rings" or "semirings".
  std::string source;
};

const std::vector<LemmaFixture>& lemma_fixtures();

/// Runs every fixture applicable to `regime` over `ring` (symbolic by
/// default).
std::vector<SoundnessReport> run_lemma_suite(Regime regime, const Ring& ring,
                                             int arity_bound = default_arity_bound());

}  // namespace zxalg
