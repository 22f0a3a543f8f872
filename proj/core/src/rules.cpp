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

#include "zxalg/rules.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <random>
#include <sstream>

#include "zxalg/error.hpp"
#include "zxalg/normalform.hpp"

namespace zxalg {

int default_arity_bound() {
  if (const char* env = std::getenv("ZXALG_ARITY_BOUND")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0 && value <= 8) return static_cast<int>(value);
  }
  return 3;
}

Diagram addition_node(const Ring& ring) {
  const Element one = ring.one();
  Diagram id = identity();
  // [x <= z] on wires (x, z): <x| T |z>.
  Diagram below = seq(par(id, triangle()), cup());
  return compose({
      par(green(1, 2, one), green(1, 2, one)),  // x x y y
      tensor({id, swap_wires(), id}),           // x y x y
      tensor({red(2, 1), id, id}),              // z x y
      tensor({green(1, 3, one), id, id}),       // z z z x y
      permutation({0, 2, 4, 1, 3}),             // z x z y z
      tensor({id, below, below}),
  });
}

Ring symbolic_ring(Regime regime) { return Ring::polynomial(regime, {}); }

namespace {

using Pair = std::pair<Diagram, Diagram>;

Element phase(const Bindings& b, const std::string& name) {
  auto it = b.phases.find(name);
  if (it == b.phases.end()) throw DomainError("phase parameter '" + name + "' is not bound");
  return it->second;
}

int arity(const Bindings& b, const std::string& name) {
  auto it = b.integers.find(name);
  if (it == b.integers.end()) throw DomainError("integer parameter '" + name + "' is not bound");
  return it->second;
}

IntParam ar(std::string name, int min = 0) { return IntParam{std::move(name), min, 0, true}; }
IntParam bit(std::string name) { return IntParam{std::move(name), 0, 1, false}; }

struct Entry {
  std::string name;
  std::vector<IntParam> ints;
  std::vector<std::string> phases;
  SchemaBuilder build;
  bool ring_only = false;
};

std::vector<Entry> shared_entries() {
  std::vector<Entry> out;
  Diagram id = identity();
  out.push_back({"S1", {ar("n"), ar("k"), ar("m")}, {"a", "b"}, [](const Ring& r, const Bindings& b) {
                   int n = arity(b, "n"), k = arity(b, "k"), m = arity(b, "m");
                   Element a = phase(b, "a"), c = phase(b, "b");
                   Diagram tail = k == 0 ? green(1, m, c) : par(identity(k), green(1, m, c));
                   return Pair{seq(green(n, k + 1, a), tail),
                               green(n, k + m, r.mul(a, c))};
                 }});
  out.push_back({"S2", {}, {}, [id](const Ring& r, const Bindings&) {
                   return Pair{green(1, 1, r.one()), id};
                 }});
  out.push_back({"S3", {}, {}, [id](const Ring& r, const Bindings&) {
                   return Pair{seq(par(green(0, 2, r.one()), id), par(id, green(2, 0, r.one()))), id};
                 }});
  out.push_back({"S4", {ar("n"), ar("m"), bit("s"), bit("t")}, {}, [](const Ring&, const Bindings& b) {
                   int n = arity(b, "n"), m = arity(b, "m");
                   bool s = arity(b, "s") != 0, t = arity(b, "t") != 0;
                   return Pair{seq(red_spider(n, 1, s), red_spider(1, m, t)), red_spider(n, m, s != t)};
                 }});
  out.push_back({"B1", {ar("m")}, {}, [](const Ring& r, const Bindings& b) {
                   int m = arity(b, "m");
                   return Pair{seq(red(0, 1), green(1, m, r.one())), power(red(0, 1), m)};
                 }});
  out.push_back({"B2", {}, {}, [id](const Ring& r, const Bindings&) {
                   Diagram g = green(1, 2, r.one());
                   return Pair{compose({par(g, g), tensor({id, swap_wires(), id}), par(red(2, 1), red(2, 1))}),
                               seq(red(2, 1), g)};
                 }});
  out.push_back({"B3", {ar("m")}, {}, [](const Ring& r, const Bindings& b) {
                   int m = arity(b, "m");
                   Diagram g = green(1, m, r.one());
                   return Pair{seq(red_pi(), g), seq(g, power(red_pi(), m))};
                 }});
  out.push_back({"Ept", {}, {"a"}, [](const Ring&, const Bindings& b) {
                   return Pair{seq(red(0, 1), green(1, 0, phase(b, "a"))), Diagram()};
                 }});
  out.push_back({"Zero", {}, {}, [](const Ring& r, const Bindings&) {
                   return Pair{green(1, 1, r.zero()), seq(red(1, 0), red(0, 1))};
                 }});
  out.push_back({"Bas0", {}, {}, [](const Ring&, const Bindings&) {
                   return Pair{seq(red(0, 1), triangle()), red(0, 1)};
                 }});
  out.push_back({"Bas1", {}, {}, [](const Ring& r, const Bindings&) {
                   return Pair{compose({red(0, 1), red_pi(), triangle()}), green(0, 1, r.one())};
                 }});
  out.push_back({"Suc", {}, {"a"}, [](const Ring& r, const Bindings& b) {
                   Element a = phase(b, "a");
                   return Pair{compose({green(0, 1, a), red_pi(), triangle(), red_pi()}),
                               green(0, 1, r.add(a, r.one()))};
                 }});
  out.push_back({"Pcy", {}, {"a"}, [](const Ring&, const Bindings& b) {
                   Element a = phase(b, "a");
                   Diagram one_state = seq(red(0, 1), red_pi());
                   return Pair{seq(one_state, green(1, 2, a)), par(seq(one_state, green(1, 1, a)), one_state)};
                 }});
  out.push_back({"Sym", {}, {}, [id](const Ring& r, const Bindings&) {
                   Diagram split = green(1, 2, r.one()), merge = green(2, 1, r.one());
                   return Pair{compose({split, par(triangle(), id), merge}),
                               compose({split, par(id, triangle()), merge})};
                 }});
  out.push_back({"Aso", {}, {}, [id](const Ring& r, const Bindings&) {
                   Diagram w = addition_node(r);
                   return Pair{seq(par(w, id), w), seq(par(id, w), w)};
                 }});
  out.push_back({"Brk", {}, {}, [](const Ring& r, const Bindings&) {
                   return Pair{seq(par(triangle(), triangle()), green(2, 1, r.one())), seq(and_gate(), triangle())};
                 }});
  out.push_back({"AD", {}, {"a", "b"}, [](const Ring& r, const Bindings& b) {
                   Element a = phase(b, "a"), c = phase(b, "b");
                   return Pair{seq(par(green(0, 1, a), green(0, 1, c)), addition_node(r)), green(0, 1, r.add(a, c))};
                 }});
  return out;
}

std::vector<Entry> ring_entries() {
  std::vector<Entry> out;
  Diagram id = identity();
  out.push_back({"EU", {}, {}, [](const Ring& r, const Bindings&) {
                   return Pair{hadamard(),
                               compose({triangle(), green(1, 1, r.from_int(-2)), red_pi(), triangle(), red_pi()})};
                 }, true});
  out.push_back({"H", {}, {}, [](const Ring& r, const Bindings&) {
                   return Pair{seq(hadamard(), red(1, 2)), seq(green(1, 2, r.one()), par(hadamard(), hadamard()))};
                 }, true});
  out.push_back({"Inv", {}, {}, [id](const Ring&, const Bindings&) {
                   return Pair{seq(triangle(), triangle_inv()), id};
                 }, true});
  return out;
}

std::vector<Entry> semiring_entries() {
  std::vector<Entry> out;
  Diagram id = identity();
  out.push_back({"B1'", {ar("m")}, {}, [](const Ring& r, const Bindings& b) {
                   int m = arity(b, "m");
                   return Pair{seq(green(0, 1, r.one()), red(1, m)), power(green(0, 1, r.one()), m)};
                 }});
  out.push_back({"Pcm", {}, {}, [](const Ring&, const Bindings&) {
                   return Pair{seq(par(red_pi(), red_pi()), red(2, 1)), red(2, 1)};
                 }});
  out.push_back({"Tid", {}, {}, [id](const Ring& r, const Bindings&) {
                   return Pair{compose({green(1, 2, r.one()), par(triangle(), id), green(2, 1, r.one())}), id};
                 }});
  out.push_back({"ASym", {}, {}, [](const Ring&, const Bindings&) {
                   return Pair{seq(swap_wires(), and_gate()), and_gate()};
                 }});
  out.push_back({"AAs", {}, {}, [id](const Ring&, const Bindings&) {
                   return Pair{seq(par(and_gate(), id), and_gate()), seq(par(id, and_gate()), and_gate())};
                 }});
  out.push_back({"Bkp", {}, {}, [id](const Ring& r, const Bindings&) {
                   return Pair{compose({green(1, 2, r.one()), par(id, red_pi()), and_gate()}),
                               seq(green(1, 0, r.one()), red(0, 1))};
                 }});
  return out;
}

// Catalog order: the shared rules in their listed order with the regime's own
// rules slotted in after them.
std::vector<RewriteRule> build_catalog(Regime regime) {
  std::vector<Entry> entries = shared_entries();
  std::vector<Entry> extra = regime == Regime::ring ? ring_entries() : semiring_entries();
  entries.insert(entries.end(), extra.begin(), extra.end());
  std::vector<RewriteRule> out;
  for (const Entry& e : entries) {
    RewriteRule rule{Schema{e.name, e.ints, e.phases, e.build}, e.name, false, e.ring_only};
    out.push_back(rule);
    SchemaBuilder base = e.build;
    RewriteRule flipped{Schema{e.name + std::string(kFlipSuffix), e.ints, e.phases,
                               [base](const Ring& r, const Bindings& b) {
                                 auto [lhs, rhs] = base(r, b);
                                 return Pair{flip(lhs), flip(rhs)};
                               }},
                        e.name, true, e.ring_only};
    out.push_back(flipped);
  }
  return out;
}

std::string describe(const std::map<std::string, int>& ints, const std::map<std::string, Element>& phases,
                     const Ring& ring) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : ints) {
    os << (first ? "" : ",") << k << '=' << v;
    first = false;
  }
  for (const auto& [k, v] : phases) {
    os << (first ? "" : ",") << k << '=' << ring.format(v);
    first = false;
  }
  return first ? std::string("-") : os.str();
}

}  // namespace

const std::vector<RewriteRule>& catalog(Regime regime) {
  static const std::vector<RewriteRule> ring_rules = build_catalog(Regime::ring);
  static const std::vector<RewriteRule> semiring_rules = build_catalog(Regime::semiring);
  return regime == Regime::ring ? ring_rules : semiring_rules;
}

std::optional<RewriteRule> find_rule(Regime regime, std::string_view name) {
  for (const RewriteRule& rule : catalog(regime))
    if (rule.name() == name) return rule;
  return std::nullopt;
}

std::pair<Diagram, Diagram> instantiate(const Schema& schema, const Ring& ring, const Bindings& bindings,
                                        int arity_bound) {
  for (const IntParam& p : schema.int_params) {
    auto it = bindings.integers.find(p.name);
    if (it == bindings.integers.end())
      throw DomainError(schema.name + ": integer parameter '" + p.name + "' is not bound");
    int hi = p.arity ? arity_bound : p.max;
    if (it->second < p.min || it->second > hi)
      throw DomainError(schema.name + ": " + p.name + "=" + std::to_string(it->second) + " outside [" +
                        std::to_string(p.min) + "," + std::to_string(hi) + "]");
  }
  for (const std::string& v : schema.phase_vars) {
    auto it = bindings.phases.find(v);
    if (it == bindings.phases.end())
      throw DomainError(schema.name + ": phase parameter '" + v + "' is not bound");
    if (!ring.contains(it->second))
      throw DomainError(schema.name + ": phase '" + v + "' is not an element of " + ring.name());
  }
  auto sides = schema.build(ring, bindings);
  if (sides.first.type() != sides.second.type())
    throw TypeError(schema.name + ": sides have types " + to_string(sides.first.type()) + " and " +
                    to_string(sides.second.type()));
  return sides;
}

std::pair<Diagram, Diagram> instantiate(const RewriteRule& rule, const Ring& ring, const Bindings& bindings,
                                        int arity_bound) {
  if (rule.ring_only && ring.regime() == Regime::semiring)
    throw RegimeError(rule.name() + " needs negatives and is unavailable over " + ring.name());
  return instantiate(rule.schema, ring, bindings, arity_bound);
}

std::vector<std::map<std::string, int>> enumerate_int_params(const Schema& schema, int arity_bound) {
  std::vector<std::map<std::string, int>> out{{}};
  for (const IntParam& p : schema.int_params) {
    int hi = p.arity ? arity_bound : p.max;
    std::vector<std::map<std::string, int>> next;
    for (const auto& partial : out)
      for (int v = p.min; v <= hi; ++v) {
        auto extended = partial;
        extended[p.name] = v;
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

bool SoundnessReport::passed() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.passed; });
}

std::size_t SoundnessReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return !r.passed; }));
}

SoundnessReport check_schema(const Schema& schema, const Ring& ring, int arity_bound,
                             const SoundnessOptions& options) {
  Ring active = ring;
  if (ring.is_polynomial()) {
    std::vector<std::string> vars = ring.variables();
    for (const std::string& v : schema.phase_vars)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    if (vars != ring.variables()) active = Ring::polynomial(ring.regime(), vars);
  }

  SoundnessReport report{schema.name, active.name(), {}};
  std::mt19937_64 rng(options.seed);
  auto run = [&](const Bindings& b) {
    InstanceResult result{describe(b.integers, b.phases, active), false, {}};
    try {
      auto [lhs, rhs] = instantiate(schema, active, b, arity_bound);
      EqualityVerdict verdict = diagram_equal(lhs, rhs, active);
      result.passed = verdict.equal;
      result.detail = verdict.reason;
    } catch (const Error& e) {
      result.detail = e.what();
    }
    report.instances.push_back(std::move(result));
  };

  for (const auto& ints : enumerate_int_params(schema, arity_bound)) {
    if (active.is_polynomial() || schema.phase_vars.empty()) {
      Bindings b{ints, {}};
      for (const std::string& v : schema.phase_vars) b.phases[v] = active.variable(v);
      run(b);
      continue;
    }
    for (int s = 0; s < std::max(1, options.samples); ++s) {
      Bindings b{ints, {}};
      for (const std::string& v : schema.phase_vars) b.phases[v] = active.random(rng);
      run(b);
    }
  }
  return report;
}

SoundnessReport check_soundness(const RewriteRule& rule, const Ring& ring, int arity_bound,
                                const SoundnessOptions& options) {
  if (rule.ring_only && ring.regime() == Regime::semiring)
    throw RegimeError(rule.name() + " needs negatives and is unavailable over " + ring.name());
  return check_schema(rule.schema, ring, arity_bound, options);
}

std::vector<SoundnessReport> check_catalog(Regime regime, const Ring& ring, int arity_bound, bool parallel,
                                           const SoundnessOptions& options) {
  const auto& rules = catalog(regime);
  std::vector<SoundnessReport> out;
  out.reserve(rules.size());
  if (!parallel) {
    for (const RewriteRule& rule : rules) out.push_back(check_soundness(rule, ring, arity_bound, options));
    return out;
  }
  std::vector<std::future<SoundnessReport>> jobs;
  for (const RewriteRule& rule : rules)
    jobs.push_back(std::async(std::launch::async, [&rule, &ring, arity_bound, options] {
      return check_soundness(rule, ring, arity_bound, options);
    }));
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace zxalg
