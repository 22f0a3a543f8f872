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

// Typed terms over the ZX generators: leaves are generators, inner nodes are
// sequential (`seq`, first applied first) and parallel (`par`) composition.
// Diagrams are immutable and share structure, so copies are cheap.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zxalg/algebra.hpp"

namespace zxalg {

enum class GeneratorKind {
  green,         // Z spider n -> m with phase
  red,           // X spider n -> m, parity indicator
  hadamard,      // ring only
  triangle,
  triangle_inv,  // ring only
  red_pi,        // the NOT gate P
  swap,
  cap,
  cup,
  identity,      // width k, k -> k
  // Derived notation; removed by expand_macros (AND may stay primitive over
  // semirings).
  and_gate,
  xor_gate,
  not_gate,
  copy,
  gbox,
};

struct DiagramType {
  int inputs = 0;
  int outputs = 0;

  friend bool operator==(const DiagramType&, const DiagramType&) = default;
};

std::string to_string(const DiagramType& type);

struct Generator {
  GeneratorKind kind = GeneratorKind::identity;
  int inputs = 0;
  int outputs = 0;
  std::optional<Element> phase;

  bool is_macro() const;
  /// Hadamard and the inverse triangle need negatives.
  bool ring_only() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

class Diagram {
 public:
  enum class Shape { generator, seq, par };

  /// The empty diagram (identity on zero wires).
  Diagram();
  explicit Diagram(Generator generator);

  /// `first` then `then`; TypeError unless outputs(first) == inputs(then).
  static Diagram seq(const Diagram& first, const Diagram& then);
  static Diagram par(const Diagram& left, const Diagram& right);

  Shape shape() const;
  bool is_generator() const { return shape() == Shape::generator; }
  const Generator& generator() const;
  /// Children: for seq (first, then), for par (left, right).
  const Diagram& lhs() const;
  const Diagram& rhs() const;

  DiagramType type() const;
  int inputs() const { return type().inputs; }
  int outputs() const { return type().outputs; }

  /// Structural equality of the term trees.
  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  struct Node;
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Diagram seq(const Diagram& first, const Diagram& then) { return Diagram::seq(first, then); }
inline Diagram par(const Diagram& left, const Diagram& right) { return Diagram::par(left, right); }

/// Right-nested sequential chain d0 ; d1 ; ... ; dk. Requires a non-empty list.
Diagram compose(const std::vector<Diagram>& parts);
/// Right-nested parallel product; the empty product is the empty diagram.
Diagram tensor(const std::vector<Diagram>& parts);
/// k parallel copies of d.
Diagram power(const Diagram& d, int k);

// Leaf constructors. These check arities but not the regime; see
// make_generator and validate for the ring-aware versions.
Diagram green(int inputs, int outputs, Element phase);
Diagram red(int inputs, int outputs);
Diagram hadamard();
Diagram triangle();
Diagram triangle_inv();
Diagram red_pi();
Diagram swap_wires();
Diagram cap();
Diagram cup();
Diagram identity(int width = 1);
Diagram and_gate();
Diagram xor_gate();
Diagram not_gate();
Diagram copy_gate(int outputs);
Diagram gbox(Element phase);

/// Red spider carrying phase 0 or pi. The pi phase is P composed on the first
/// output (first input when there are no outputs); the 0 -> 0 case with pi is
/// the zero scalar <0|P|0>.
Diagram red_spider(int inputs, int outputs, bool pi);

struct GeneratorParams {
  int inputs = 0;
  int outputs = 0;
  std::optional<Element> phase;
};

/// Ring-aware leaf construction: rejects ring-only kinds over semirings and
/// phases that are not elements of `ring`. Arities are taken from `params`
/// only for the kinds that have them (spiders, identity, copy).
Diagram make_generator(GeneratorKind kind, const GeneratorParams& params, const Ring& ring);

/// Throws RegimeError/DomainError if `d` cannot live over `ring`.
void validate(const Diagram& d, const Ring& ring);

/// Wire permutation on `target.size()` wires: input wire i exits at position
/// target[i]. Built from adjacent swaps.
Diagram permutation(const std::vector<int>& target);

/// 0 -> 2n state sum_x |x>|x> with the two copies blocked (all of x, then x).
Diagram cap_pairs(int n);
/// 2n -> 0 effect sum_x <x|<x| on blocked wires.
Diagram cup_pairs(int n);

/// m -> n diagram built from d with caps, cups and swaps, evaluating to the
/// matrix transpose of d.
Diagram transpose(const Diagram& d);

/// Upside-down mirror image, generator by generator. Also evaluates to the
/// transpose; triangles and AND are flipped through bending.
Diagram flip(const Diagram& d);

/// n -> m becomes 0 -> (n + m): inputs bent up to the left of the outputs. The
/// state is the column-major flattening of the matrix.
Diagram bend_to_state(const Diagram& d);
/// Inverse of bend_to_state: a 0 -> (n + m) state becomes an n -> m map.
Diagram unbend_to_map(const Diagram& state, int inputs, int outputs);

struct MacroOptions {
  /// Replacement for AND over semirings. When unset the AND box is left in
  /// place as a primitive.
  std::function<Diagram(const Ring&)> semiring_and;
  bool forbid_primitive_and = false;
};

/// T^-1 . Z(2,1) . (T (x) T): AND built from core ring generators.
Diagram and_ring_expansion(const Ring& ring);

/// Replaces derived notation by core generators. Over rings the result is
/// macro-free; over semirings AND stays primitive unless `options` says
/// otherwise.
Diagram expand_macros(const Diagram& d, const Ring& ring, const MacroOptions& options = {});

/// Applies `f` to every phase in the term.
Diagram map_phases(const Diagram& d, const std::function<Element(const Element&)>& f);

/// Number of generator leaves (identities included).
std::size_t leaf_count(const Diagram& d);

/// Visits every generator leaf, left to right.
void for_each_generator(const Diagram& d, const std::function<void(const Generator&)>& visit);

}  // namespace zxalg
