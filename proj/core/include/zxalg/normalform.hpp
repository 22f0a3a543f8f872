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

// Normal forms built from elementary operations, and the semantic
// normalization and equality they induce.
//
// A vector (a_0, ..., a_{2^m-1}) on m >= 1 wires is realized as the base state
// |1...1>, followed by one row addition per nonempty exponent set S carrying
// a_j with j = 2^m - 1 - sum_{k in S} 2^k, followed by one row multiplication
// by a_{2^m-1}.

#include <string>
#include <vector>

#include "zxalg/gadgets.hpp"

namespace zxalg {

struct NormalFormSpec {
  int wires = 0;
  std::vector<Element> coefficients;
  /// Row-addition subsets in canonical order; empty when wires == 0.
  std::vector<ExponentSet> additions;

  std::size_t gadget_count() const { return additions.size(); }
};

struct NormalForm {
  NormalFormSpec spec;
  Diagram diagram;
  /// Pieces in application order: "base", "add[...]" per gadget, "mult";
  /// for scalars a single "scalar" piece. `diagram` is their composite.
  std::vector<std::pair<std::string, Diagram>> parts;
};

/// |1>^{(x) m}.
Diagram base_state(int wires);
/// 0 -> 0 diagram evaluating to a: |1> fed into the effect <0| + a<1|.
Diagram scalar_form(const Element& a);

/// The normal form of a column vector of length 2^m.
NormalForm normal_form(const Ring& ring, const std::vector<Element>& vector);

Diagram synthesize_state(const Ring& ring, const std::vector<Element>& vector);
/// Universality: any 2^m x 2^n matrix as an n -> m diagram, via map-state
/// duality.
Diagram synthesize_map(const Ring& ring, const DenseMatrix& matrix);

/// synthesize_map(evaluate(d)).
Diagram normalize(const Diagram& d, const Ring& ring);

struct EqualityVerdict {
  bool equal = false;
  std::string reason;

  explicit operator bool() const { return equal; }
};

/// Semantic equality: matching types and equal interpretations.
EqualityVerdict diagram_equal(const Diagram& a, const Diagram& b, const Ring& ring);

struct CompletenessResult {
  NormalForm result;
  /// The construction being normalized (tensor, plugged form, bent generator).
  Diagram construction;
  DenseMatrix construction_value;
  DenseMatrix result_value;
  bool verified = false;
};

/// Juxtaposition of two normal forms rewritten into one.
CompletenessResult tensor_of_normal_forms(const Ring& ring, const NormalForm& a, const NormalForm& b);
/// Outputs i and j of a normal form plugged together with a cup.
CompletenessResult self_plug(const Ring& ring, const NormalForm& form, int first_wire, int second_wire);
/// A generator bent into a state, then normalized.
CompletenessResult generator_to_normal_form(const Ring& ring, const Diagram& generator);
/// A 0 -> 0 diagram normalized to the scalar form.
CompletenessResult scalar_to_normal_form(const Ring& ring, const Diagram& scalar);

}  // namespace zxalg
