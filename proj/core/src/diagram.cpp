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

#include "zxalg/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "zxalg/error.hpp"

namespace zxalg {

std::string to_string(const DiagramType& type) {
  return std::to_string(type.inputs) + "->" + std::to_string(type.outputs);
}

bool Generator::is_macro() const {
  switch (kind) {
    case GeneratorKind::and_gate:
    case GeneratorKind::xor_gate:
    case GeneratorKind::not_gate:
    case GeneratorKind::copy:
    case GeneratorKind::gbox:
      return true;
    default:
      return false;
  }
}

bool Generator::ring_only() const {
  return kind == GeneratorKind::hadamard || kind == GeneratorKind::triangle_inv;
}

struct Diagram::Node {
  Shape shape = Shape::generator;
  Generator generator;
  Diagram lhs{nullptr};
  Diagram rhs{nullptr};
  DiagramType type;
};

Diagram::Diagram() : Diagram(Generator{GeneratorKind::identity, 0, 0, std::nullopt}) {}

Diagram::Diagram(Generator generator) {
  if (generator.inputs < 0 || generator.outputs < 0) {
    throw TypeError("generator arities must be non-negative");
  }
  auto node = std::make_shared<Node>();
  node->type = {generator.inputs, generator.outputs};
  node->generator = std::move(generator);
  node_ = std::move(node);
}

Diagram Diagram::seq(const Diagram& first, const Diagram& then) {
  if (first.outputs() != then.inputs()) {
    throw TypeError("cannot compose " + to_string(first.type()) + " with " + to_string(then.type()) +
                    ": " + std::to_string(first.outputs()) + " outputs feed " +
                    std::to_string(then.inputs()) + " inputs");
  }
  auto node = std::make_shared<Node>();
  node->shape = Shape::seq;
  node->lhs = first;
  node->rhs = then;
  node->type = {first.inputs(), then.outputs()};
  return Diagram(std::shared_ptr<const Node>(std::move(node)));
}

Diagram Diagram::par(const Diagram& left, const Diagram& right) {
  auto node = std::make_shared<Node>();
  node->shape = Shape::par;
  node->lhs = left;
  node->rhs = right;
  node->type = {left.inputs() + right.inputs(), left.outputs() + right.outputs()};
  return Diagram(std::shared_ptr<const Node>(std::move(node)));
}

Diagram::Shape Diagram::shape() const { return node_->shape; }

const Generator& Diagram::generator() const {
  if (node_->shape != Shape::generator) throw DomainError("diagram is not a generator");
  return node_->generator;
}

const Diagram& Diagram::lhs() const {
  if (node_->shape == Shape::generator) throw DomainError("generator has no children");
  return node_->lhs;
}

const Diagram& Diagram::rhs() const {
  if (node_->shape == Shape::generator) throw DomainError("generator has no children");
  return node_->rhs;
}

DiagramType Diagram::type() const { return node_->type; }

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->shape != b.node_->shape || a.node_->type != b.node_->type) return false;
  if (a.node_->shape == Diagram::Shape::generator) return a.node_->generator == b.node_->generator;
  return a.node_->lhs == b.node_->lhs && a.node_->rhs == b.node_->rhs;
}

// ---------------------------------------------------------------------------

Diagram compose(const std::vector<Diagram>& parts) {
  if (parts.empty()) throw DomainError("compose needs at least one diagram");
  Diagram out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = seq(*it, out);
  return out;
}

Diagram tensor(const std::vector<Diagram>& parts) {
  if (parts.empty()) return Diagram();
  Diagram out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = par(*it, out);
  return out;
}

Diagram power(const Diagram& d, int k) {
  return tensor(std::vector<Diagram>(static_cast<std::size_t>(std::max(k, 0)), d));
}

namespace {

Diagram leaf(GeneratorKind kind, int n, int m, std::optional<Element> phase = std::nullopt) {
  return Diagram(Generator{kind, n, m, std::move(phase)});
}

bool is_empty(const Diagram& d) {
  return d.is_generator() && d.generator().kind == GeneratorKind::identity && d.inputs() == 0;
}

// Parallel composition that drops empty factors.
Diagram juxt(const Diagram& a, const Diagram& b) {
  if (is_empty(a)) return b;
  if (is_empty(b)) return a;
  return par(a, b);
}

}  // namespace

Diagram green(int n, int m, Element phase) { return leaf(GeneratorKind::green, n, m, std::move(phase)); }
Diagram red(int n, int m) { return leaf(GeneratorKind::red, n, m); }
Diagram hadamard() { return leaf(GeneratorKind::hadamard, 1, 1); }
Diagram triangle() { return leaf(GeneratorKind::triangle, 1, 1); }
Diagram triangle_inv() { return leaf(GeneratorKind::triangle_inv, 1, 1); }
Diagram red_pi() { return leaf(GeneratorKind::red_pi, 1, 1); }
Diagram swap_wires() { return leaf(GeneratorKind::swap, 2, 2); }
Diagram cap() { return leaf(GeneratorKind::cap, 0, 2); }
Diagram cup() { return leaf(GeneratorKind::cup, 2, 0); }
Diagram identity(int width) { return leaf(GeneratorKind::identity, width, width); }
Diagram and_gate() { return leaf(GeneratorKind::and_gate, 2, 1); }
Diagram xor_gate() { return leaf(GeneratorKind::xor_gate, 2, 1); }
Diagram not_gate() { return leaf(GeneratorKind::not_gate, 1, 1); }
Diagram copy_gate(int outputs) { return leaf(GeneratorKind::copy, 1, outputs); }
Diagram gbox(Element phase) { return leaf(GeneratorKind::gbox, 1, 1, std::move(phase)); }

Diagram red_spider(int n, int m, bool pi) {
  if (!pi) return red(n, m);
  if (m > 0) return seq(red(n, m), juxt(red_pi(), identity(m - 1)));
  if (n > 0) return seq(juxt(red_pi(), identity(n - 1)), red(n, m));
  return compose({red(0, 1), red_pi(), red(1, 0)});
}

Diagram make_generator(GeneratorKind kind, const GeneratorParams& params, const Ring& ring) {
  auto need_phase = [&] {
    if (!params.phase) throw DomainError("generator needs a phase");
    return *params.phase;
  };
  Diagram d;
  switch (kind) {
    case GeneratorKind::green: d = green(params.inputs, params.outputs, need_phase()); break;
    case GeneratorKind::red: d = red(params.inputs, params.outputs); break;
    case GeneratorKind::hadamard: d = hadamard(); break;
    case GeneratorKind::triangle: d = triangle(); break;
    case GeneratorKind::triangle_inv: d = triangle_inv(); break;
    case GeneratorKind::red_pi: d = red_pi(); break;
    case GeneratorKind::swap: d = swap_wires(); break;
    case GeneratorKind::cap: d = cap(); break;
    case GeneratorKind::cup: d = cup(); break;
    case GeneratorKind::identity: d = identity(params.inputs); break;
    case GeneratorKind::and_gate: d = and_gate(); break;
    case GeneratorKind::xor_gate: d = xor_gate(); break;
    case GeneratorKind::not_gate: d = not_gate(); break;
    case GeneratorKind::copy: d = copy_gate(params.outputs); break;
    case GeneratorKind::gbox: d = gbox(need_phase()); break;
  }
  validate(d, ring);
  return d;
}

void for_each_generator(const Diagram& d, const std::function<void(const Generator&)>& visit) {
  if (d.is_generator()) {
    visit(d.generator());
    return;
  }
  for_each_generator(d.lhs(), visit);
  for_each_generator(d.rhs(), visit);
}

void validate(const Diagram& d, const Ring& ring) {
  for_each_generator(d, [&ring](const Generator& g) {
    if (g.ring_only() && ring.regime() == Regime::semiring) {
      throw RegimeError(std::string(g.kind == GeneratorKind::hadamard ? "H" : "Tinv") +
                        " needs additive inverses and is not available over semiring " + ring.name());
    }
    if (g.phase && !ring.contains(*g.phase)) {
      throw DomainError("phase is not an element of " + ring.name());
    }
  });
}

std::size_t leaf_count(const Diagram& d) {
  std::size_t count = 0;
  for_each_generator(d, [&count](const Generator&) { ++count; });
  return count;
}

// ---------------------------------------------------------------------------
// Wiring

Diagram permutation(const std::vector<int>& target) {
  const int k = static_cast<int>(target.size());
  std::vector<int> sorted(target);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) throw DomainError("not a permutation");
  }
  // arrangement[pos] = target position of the wire currently at pos.
  std::vector<int> arrangement(target);
  std::vector<Diagram> layers;
  // Odd-even transposition sort: each round is one layer of disjoint swaps.
  for (int round = 0; !std::is_sorted(arrangement.begin(), arrangement.end()); ++round) {
    std::vector<Diagram> parts;
    int pending = 0;
    bool swapped = false;
    int pos = 0;
    if (round % 2 == 1) {
      pending = 1;
      pos = 1;
    }
    for (; pos < k; pos += 2) {
      if (pos + 1 < k && arrangement[static_cast<std::size_t>(pos)] > arrangement[static_cast<std::size_t>(pos + 1)]) {
        if (pending) parts.push_back(identity(pending));
        pending = 0;
        parts.push_back(swap_wires());
        std::swap(arrangement[static_cast<std::size_t>(pos)], arrangement[static_cast<std::size_t>(pos + 1)]);
        swapped = true;
      } else {
        pending += std::min(2, k - pos);
      }
    }
    if (pending) parts.push_back(identity(pending));
    if (swapped) layers.push_back(tensor(parts));
  }
  if (layers.empty()) return identity(k);
  return compose(layers);
}

Diagram cap_pairs(int n) {
  if (n == 0) return Diagram();
  if (n == 1) return cap();
  std::vector<int> target(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    target[static_cast<std::size_t>(2 * i)] = i;
    target[static_cast<std::size_t>(2 * i + 1)] = n + i;
  }
  return seq(power(cap(), n), permutation(target));
}

Diagram cup_pairs(int n) {
  if (n == 0) return Diagram();
  if (n == 1) return cup();
  std::vector<int> target(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    target[static_cast<std::size_t>(i)] = 2 * i;
    target[static_cast<std::size_t>(n + i)] = 2 * i + 1;
  }
  return seq(permutation(target), power(cup(), n));
}

Diagram transpose(const Diagram& d) {
  const int n = d.inputs();
  const int m = d.outputs();
  // wires: y' | x x''  ->  y' | y x''  ->  x''
  return compose({juxt(identity(m), cap_pairs(n)),
                  juxt(identity(m), juxt(d, identity(n))),
                  juxt(cup_pairs(m), identity(n))});
}

Diagram flip(const Diagram& d) {
  switch (d.shape()) {
    case Diagram::Shape::seq:
      return seq(flip(d.rhs()), flip(d.lhs()));
    case Diagram::Shape::par:
      return par(flip(d.lhs()), flip(d.rhs()));
    case Diagram::Shape::generator:
      break;
  }
  const Generator& g = d.generator();
  switch (g.kind) {
    case GeneratorKind::green: return green(g.outputs, g.inputs, *g.phase);
    case GeneratorKind::red: return red(g.outputs, g.inputs);
    case GeneratorKind::cap: return cup();
    case GeneratorKind::cup: return cap();
    case GeneratorKind::xor_gate: return red(1, 2);
    case GeneratorKind::triangle:
    case GeneratorKind::triangle_inv:
    case GeneratorKind::and_gate:
    case GeneratorKind::copy:
      return transpose(d);
    default:
      return d;
  }
}

Diagram bend_to_state(const Diagram& d) {
  const int n = d.inputs();
  if (n == 0) return d;
  return seq(cap_pairs(n), juxt(identity(n), d));
}

Diagram unbend_to_map(const Diagram& state, int inputs, int outputs) {
  if (inputs < 0 || outputs < 0 || state.inputs() != 0 || state.outputs() != inputs + outputs) {
    throw DomainError("cannot unbend a " + to_string(state.type()) + " state into a " +
                      std::to_string(inputs) + "->" + std::to_string(outputs) + " map");
  }
  if (inputs == 0) return state;
  return seq(juxt(identity(inputs), state), juxt(cup_pairs(inputs), identity(outputs)));
}

// ---------------------------------------------------------------------------
// Macros

Diagram and_ring_expansion(const Ring& ring) {
  return compose({par(triangle(), triangle()), green(2, 1, ring.one()), triangle_inv()});
}

Diagram expand_macros(const Diagram& d, const Ring& ring, const MacroOptions& options) {
  switch (d.shape()) {
    case Diagram::Shape::seq:
      return seq(expand_macros(d.lhs(), ring, options), expand_macros(d.rhs(), ring, options));
    case Diagram::Shape::par:
      return par(expand_macros(d.lhs(), ring, options), expand_macros(d.rhs(), ring, options));
    case Diagram::Shape::generator:
      break;
  }
  const Generator& g = d.generator();
  switch (g.kind) {
    case GeneratorKind::and_gate:
      if (ring.regime() == Regime::ring) return and_ring_expansion(ring);
      if (options.semiring_and) return expand_macros(options.semiring_and(ring), ring, options);
      if (options.forbid_primitive_and) {
        throw RegimeError("AND has no core expansion over semiring " + ring.name());
      }
      return d;
    case GeneratorKind::xor_gate: return red(2, 1);
    case GeneratorKind::not_gate: return red_pi();
    case GeneratorKind::copy: return green(1, g.outputs, ring.one());
    case GeneratorKind::gbox: return green(1, 1, *g.phase);
    default: return d;
  }
}

Diagram map_phases(const Diagram& d, const std::function<Element(const Element&)>& f) {
  switch (d.shape()) {
    case Diagram::Shape::seq:
      return seq(map_phases(d.lhs(), f), map_phases(d.rhs(), f));
    case Diagram::Shape::par:
      return par(map_phases(d.lhs(), f), map_phases(d.rhs(), f));
    case Diagram::Shape::generator:
      break;
  }
  Generator g = d.generator();
  if (!g.phase) return d;
  g.phase = f(*g.phase);
  return Diagram(std::move(g));
}

}  // namespace zxalg
