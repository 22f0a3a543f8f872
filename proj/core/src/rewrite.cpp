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

#include "zxalg/rewrite.hpp"

#include <climits>
#include <sstream>

#include "zxalg/error.hpp"
#include "zxalg/io.hpp"
#include "zxalg/normalform.hpp"

namespace zxalg {
namespace {

void flatten(const Diagram& d, Diagram::Shape shape, std::vector<Diagram>& out) {
  if (d.shape() == shape) {
    flatten(d.lhs(), shape, out);
    flatten(d.rhs(), shape, out);
  } else {
    out.push_back(d);
  }
}

bool is_identity(const Diagram& d) {
  if (d.is_generator()) return d.generator().kind == GeneratorKind::identity;
  if (d.shape() == Diagram::Shape::par) return is_identity(d.lhs()) && is_identity(d.rhs());
  return false;
}

Diagram unalias(const Generator& g, const Diagram& d) {
  switch (g.kind) {
    case GeneratorKind::gbox: return green(1, 1, *g.phase);
    case GeneratorKind::xor_gate: return red(2, 1);
    case GeneratorKind::not_gate: return red_pi();
    default: return d;
  }
}

Diagram rebuild(const std::vector<Diagram>& parts, Diagram::Shape shape) {
  Diagram out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    out = shape == Diagram::Shape::seq ? seq(parts[i], out) : par(parts[i], out);
  return out;
}

Diagram normalize_with(const Diagram& d, const std::optional<Element>& one);

Diagram normalize_seq(const Diagram& d, const std::optional<Element>& one) {
  std::vector<Diagram> raw;
  flatten(d, Diagram::Shape::seq, raw);
  std::vector<Diagram> kept;
  for (const Diagram& f : raw) {
    Diagram n = normalize_with(f, one);
    if (!is_identity(n)) kept.push_back(n);
  }
  if (kept.empty()) return identity(d.inputs());
  return rebuild(kept, Diagram::Shape::seq);
}

Diagram normalize_par(const Diagram& d, const std::optional<Element>& one) {
  std::vector<Diagram> raw;
  flatten(d, Diagram::Shape::par, raw);
  std::vector<Diagram> kept;
  int pending = 0;
  auto flush = [&] {
    if (pending > 0) kept.push_back(identity(pending));
    pending = 0;
  };
  for (const Diagram& f : raw) {
    Diagram n = normalize_with(f, one);
    if (n.inputs() == 0 && n.outputs() == 0 && is_identity(n)) continue;
    if (n.is_generator() && n.generator().kind == GeneratorKind::identity) {
      pending += n.inputs();
      continue;
    }
    if (n.shape() == Diagram::Shape::par) {
      // A nested chain can surface after normalizing a child.
      std::vector<Diagram> inner;
      flatten(n, Diagram::Shape::par, inner);
      for (const Diagram& g : inner) {
        if (g.is_generator() && g.generator().kind == GeneratorKind::identity) {
          pending += g.inputs();
        } else {
          flush();
          kept.push_back(g);
        }
      }
      continue;
    }
    flush();
    kept.push_back(n);
  }
  flush();
  if (kept.empty()) return Diagram();
  return rebuild(kept, Diagram::Shape::par);
}

Diagram normalize_with(const Diagram& d, const std::optional<Element>& one) {
  switch (d.shape()) {
    case Diagram::Shape::generator: {
      const Generator& g = d.generator();
      if (g.kind == GeneratorKind::copy) return one ? green(1, g.outputs, *one) : d;
      return unalias(g, d);
    }
    case Diagram::Shape::seq: return normalize_seq(d, one);
    case Diagram::Shape::par: return normalize_par(d, one);
  }
  return d;
}

const Diagram& child(const Diagram& d, int index) {
  if (d.is_generator()) throw DomainError("position descends below a generator");
  if (index == 0) return d.lhs();
  if (index == 1) return d.rhs();
  throw DomainError("position index must be 0 or 1");
}

Diagram replace_at(const Diagram& d, const Position& position, std::size_t depth, const Diagram& replacement) {
  if (depth == position.size()) return replacement;
  Diagram left = d.lhs(), right = d.rhs();
  if (position[depth] == 0)
    left = replace_at(left, position, depth + 1, replacement);
  else
    right = replace_at(right, position, depth + 1, replacement);
  return d.shape() == Diagram::Shape::seq ? seq(left, right) : par(left, right);
}

// Replaces the first run of `at`'s chain factors equal to the chain of `lhs`.
std::optional<Diagram> rewrite_chain(const Diagram& at, const Diagram& lhs, const Diagram& rhs) {
  for (Diagram::Shape shape : {Diagram::Shape::seq, Diagram::Shape::par}) {
    std::vector<Diagram> target, pattern;
    flatten(at, shape, target);
    flatten(lhs, shape, pattern);
    if (pattern.size() > target.size()) continue;
    for (std::size_t i = 0; i + pattern.size() <= target.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < pattern.size() && match; ++j) match = target[i + j] == pattern[j];
      if (!match) continue;
      std::vector<Diagram> out(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(rhs);
      out.insert(out.end(), target.begin() + static_cast<std::ptrdiff_t>(i + pattern.size()), target.end());
      return rebuild(out, shape);
    }
  }
  return std::nullopt;
}

}  // namespace

Diagram structural_normalize(const Diagram& d) { return normalize_with(d, std::nullopt); }

Diagram structural_normalize(const Diagram& d, const Ring& ring) { return normalize_with(d, ring.one()); }

Position parse_position(const std::string& text) {
  if (text == "root" || text.empty()) return {};
  Position out;
  std::size_t col = 1;
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(c - '0');
    } else if (c != '.') {
      throw ParseError("bad position '" + text + "'", 1, static_cast<int>(col));
    }
    ++col;
  }
  return out;
}

std::string to_string(const Position& position) {
  if (position.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < position.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(position[i]);
  }
  return out;
}

Diagram subterm(const Diagram& d, const Position& position) {
  Diagram cur = structural_normalize(d);
  for (int index : position) cur = child(cur, index);
  return cur;
}

Bindings bind_arguments(const Schema& schema, const std::map<std::string, std::string>& arguments, const Ring& ring) {
  Bindings b;
  for (const auto& [key, text] : arguments) {
    bool known = false;
    for (const IntParam& p : schema.int_params)
      if (p.name == key) {
        try {
          std::size_t used = 0;
          int v = std::stoi(text, &used);
          if (used != text.size()) throw std::invalid_argument(text);
          b.integers[key] = v;
        } catch (const std::exception&) {
          throw DomainError(schema.name + ": parameter " + key + " needs an integer, got '" + text + "'");
        }
        known = true;
      }
    for (const std::string& v : schema.phase_vars)
      if (v == key) {
        b.phases[key] = ring.parse_element(text);
        known = true;
      }
    if (!known) throw DomainError(schema.name + " has no parameter '" + key + "'");
  }
  return b;
}

Diagram apply_rule(const Diagram& d, const RewriteRule& rule, const Bindings& bindings, const Position& position,
                   const Ring& ring) {
  auto [lhs, rhs] = instantiate(rule, ring, bindings, INT_MAX / 2);
  Diagram root = structural_normalize(d, ring);
  Diagram at = root;
  for (int index : position) at = child(at, index);
  Diagram pattern = structural_normalize(lhs, ring);
  std::optional<Diagram> rewritten;
  if (at == pattern) {
    rewritten = structural_normalize(rhs, ring);
  } else {
    rewritten = rewrite_chain(at, pattern, structural_normalize(rhs, ring));
  }
  if (!rewritten)
    throw DomainError(rule.name() + ": left-hand side does not occur at " + to_string(position));
  return structural_normalize(replace_at(root, position, 0, *rewritten), ring);
}

DerivationReport check_derivation(const Derivation& derivation, const Ring& ring, DerivationMode mode) {
  DerivationReport report;
  Diagram current = derivation.start;
  for (std::size_t i = 0; i < derivation.steps.size(); ++i) {
    const DerivationStep& step = derivation.steps[i];
    auto fail = [&](const std::string& why) {
      report.failed_step = i + 1;
      report.reason = why;
      report.final = current;
      return report;
    };
    try {
      if (step.rule.empty() || mode == DerivationMode::semantic) {
        EqualityVerdict v = diagram_equal(current, step.result, ring);
        if (!v.equal) return fail("step changes the value (" + v.reason + ")");
        current = step.result;
        continue;
      }
      std::optional<RewriteRule> rule = find_rule(ring.regime(), step.rule);
      if (!rule) return fail("unknown rule '" + step.rule + "' for regime " + std::string(to_string(ring.regime())));
      Bindings b = bind_arguments(rule->schema, step.arguments, ring);
      Diagram next = apply_rule(current, *rule, b, step.position, ring);
      if (!(next == structural_normalize(step.result, ring)))
        return fail("stated result differs from the rewritten term: " + format_diagram(next, ring));
      current = step.result;
    } catch (const Error& e) {
      return fail(e.what());
    }
  }
  report.ok = true;
  report.final = current;
  return report;
}

}  // namespace zxalg
