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

#include "zxalg/normalform.hpp"

#include "zxalg/error.hpp"

namespace zxalg {

Diagram base_state(int wires) { return power(seq(red(0, 1), red_pi()), wires); }

Diagram scalar_form(const Element& a) { return compose({red(0, 1), red_pi(), green(1, 0, a)}); }

namespace {

std::string describe(const ExponentSet& s) {
  std::string out = "add[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

}  // namespace

NormalForm normal_form(const Ring& ring, const std::vector<Element>& vector) {
  const auto m = exact_log2(vector.size());
  if (!m) throw DomainError("vector length " + std::to_string(vector.size()) + " is not a power of two");
  for (const auto& e : vector) {
    if (!ring.contains(e)) throw DomainError("vector entry is not an element of " + ring.name());
  }
  NormalForm nf;
  nf.spec.wires = *m;
  nf.spec.coefficients = vector;
  if (*m == 0) {
    nf.parts.emplace_back("scalar", scalar_form(vector.front()));
    nf.diagram = nf.parts.front().second;
    return nf;
  }
  nf.spec.additions = nonempty_subsets(*m);
  nf.parts.emplace_back("base", base_state(*m));
  for (const auto& s : nf.spec.additions) {
    nf.parts.emplace_back(describe(s), row_add_gadget(ring, *m, s, vector[row_index(*m, s)]));
  }
  nf.parts.emplace_back("mult", row_mult_gadget(ring, *m, vector.back()));
  std::vector<Diagram> chain;
  for (const auto& [label, d] : nf.parts) chain.push_back(d);
  nf.diagram = compose(chain);
  return nf;
}

Diagram synthesize_state(const Ring& ring, const std::vector<Element>& vector) {
  return normal_form(ring, vector).diagram;
}

Diagram synthesize_map(const Ring& ring, const DenseMatrix& matrix) {
  const auto m = exact_log2(matrix.rows());
  const auto n = exact_log2(matrix.cols());
  if (!m || !n) {
    throw DomainError("matrix dimensions " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                      " are not powers of two");
  }
  return unbend_to_map(synthesize_state(ring, vec(matrix).entries()), *n, *m);
}

Diagram normalize(const Diagram& d, const Ring& ring) { return synthesize_map(ring, evaluate(d, ring)); }

EqualityVerdict diagram_equal(const Diagram& a, const Diagram& b, const Ring& ring) {
  if (a.type() != b.type()) {
    return {false, "type: " + to_string(a.type()) + " vs " + to_string(b.type())};
  }
  const DenseMatrix ma = evaluate(a, ring);
  const DenseMatrix mb = evaluate(b, ring);
  if (auto diff = first_difference(ma, mb)) {
    return {false, "value: entry (" + std::to_string(diff->first) + "," + std::to_string(diff->second) +
                       ") is " + ring.format(ma(diff->first, diff->second)) + " vs " +
                       ring.format(mb(diff->first, diff->second))};
  }
  return {true, "equal"};
}

namespace {

CompletenessResult finish(const Ring& ring, Diagram construction) {
  CompletenessResult out;
  out.construction = std::move(construction);
  out.construction_value = evaluate(out.construction, ring);
  out.result = normal_form(ring, out.construction_value.entries());
  out.result_value = evaluate(out.result.diagram, ring);
  out.verified = equal(out.result_value, out.construction_value);
  return out;
}

}  // namespace

CompletenessResult tensor_of_normal_forms(const Ring& ring, const NormalForm& a, const NormalForm& b) {
  return finish(ring, par(a.diagram, b.diagram));
}

CompletenessResult self_plug(const Ring& ring, const NormalForm& form, int first_wire, int second_wire) {
  const int m = form.diagram.outputs();
  if (first_wire < 0 || second_wire < 0 || first_wire >= m || second_wire >= m || first_wire == second_wire) {
    throw DomainError("wire pair (" + std::to_string(first_wire) + "," + std::to_string(second_wire) +
                      ") is out of range for a " + std::to_string(m) + "-wire normal form");
  }
  // Move the plugged pair to the front, then cup it.
  std::vector<int> target(static_cast<std::size_t>(m));
  int next = 2;
  for (int w = 0; w < m; ++w) {
    if (w == first_wire) target[static_cast<std::size_t>(w)] = 0;
    else if (w == second_wire) target[static_cast<std::size_t>(w)] = 1;
    else target[static_cast<std::size_t>(w)] = next++;
  }
  Diagram plug = m == 2 ? cup() : par(cup(), identity(m - 2));
  return finish(ring, compose({form.diagram, permutation(target), plug}));
}

CompletenessResult generator_to_normal_form(const Ring& ring, const Diagram& generator) {
  return finish(ring, bend_to_state(generator));
}

CompletenessResult scalar_to_normal_form(const Ring& ring, const Diagram& scalar) {
  if (scalar.inputs() != 0 || scalar.outputs() != 0) {
    throw DomainError("expected a scalar diagram, got " + to_string(scalar.type()));
  }
  return finish(ring, scalar);
}

}  // namespace zxalg
