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

#include "zxalg/gadgets.hpp"

#include <algorithm>
#include <set>

#include "zxalg/error.hpp"

namespace zxalg {

namespace {

void check_exponents(int wires, const ExponentSet& exponents) {
  if (wires < 1) throw DomainError("gadgets need at least one wire");
  if (exponents.empty()) throw DomainError("row addition needs a nonempty exponent set");
  std::set<int> seen;
  for (int k : exponents) {
    if (k < 0 || k >= wires) throw DomainError("exponent " + std::to_string(k) + " out of range");
    if (!seen.insert(k).second) throw DomainError("repeated exponent " + std::to_string(k));
  }
}

// Copies each of the m wires once and gathers the copies to the right:
// m -> 2m, wires (x_0..x_{m-1}, t_0..t_{m-1}).
Diagram tap_all(const Ring& ring, int wires) {
  std::vector<int> target(static_cast<std::size_t>(2 * wires));
  for (int i = 0; i < wires; ++i) {
    target[static_cast<std::size_t>(2 * i)] = i;
    target[static_cast<std::size_t>(2 * i + 1)] = wires + i;
  }
  return seq(power(green(1, 2, ring.one()), wires), permutation(target));
}

Diagram beside(const Diagram& a, const Diagram& b) {
  if (a.inputs() == 0 && a.outputs() == 0) return b;
  return par(a, b);
}

}  // namespace

std::size_t row_index(int wires, const ExponentSet& exponents) {
  check_exponents(wires, exponents);
  std::size_t mask = 0;
  for (int k : exponents) mask |= std::size_t{1} << k;
  return ((std::size_t{1} << wires) - 1) - mask;
}

DenseMatrix row_add_matrix(const Ring& ring, int wires, const ExponentSet& exponents, const Element& coefficient) {
  const std::size_t j = row_index(wires, exponents);
  const std::size_t n = std::size_t{1} << wires;
  DenseMatrix out = DenseMatrix::identity(ring, n);
  out(j, n - 1) = coefficient;
  return out;
}

DenseMatrix row_mult_matrix(const Ring& ring, int wires, const Element& coefficient) {
  if (wires < 1) throw DomainError("row multiplication needs at least one wire");
  const std::size_t n = std::size_t{1} << wires;
  DenseMatrix out = DenseMatrix::identity(ring, n);
  out(n - 1, n - 1) = coefficient;
  return out;
}

Diagram row_add_gadget(const Ring& ring, int wires, const ExponentSet& exponents, const Element& coefficient) {
  check_exponents(wires, exponents);
  const int m = wires;
  const int s = static_cast<int>(exponents.size());

  std::vector<Diagram> steps;
  steps.push_back(tap_all(ring, m));
  steps.push_back(par(identity(m), power(triangle(), m)));
  steps.push_back(par(identity(m), green(m, 1, coefficient)));
  if (s > 1) steps.push_back(par(identity(m), green(1, s, ring.one())));

  // Interleave each copy right after its target wire, then XOR it in.
  std::vector<int> positions;
  for (int k : exponents) positions.push_back(m - 1 - k);
  std::sort(positions.begin(), positions.end());

  std::vector<int> target(static_cast<std::size_t>(m + s));
  std::vector<Diagram> merge;
  int out = 0;
  int copy_index = 0;
  for (int p = 0; p < m; ++p) {
    target[static_cast<std::size_t>(p)] = out++;
    if (std::binary_search(positions.begin(), positions.end(), p)) {
      target[static_cast<std::size_t>(m + copy_index++)] = out++;
      merge.push_back(red(2, 1));
    } else {
      merge.push_back(identity());
    }
  }
  steps.push_back(permutation(target));
  steps.push_back(tensor(merge));
  return compose(steps);
}

Diagram row_mult_gadget(const Ring& ring, int wires, const Element& coefficient) {
  if (wires < 1) throw DomainError("row multiplication needs at least one wire");
  if (wires == 1) return green(1, 1, coefficient);
  const int m = wires;
  std::vector<Diagram> steps;
  steps.push_back(tap_all(ring, m));
  if (ring.regime() == Regime::ring) {
    steps.push_back(par(identity(m), power(triangle(), m)));
    steps.push_back(par(identity(m), green(m, 1, ring.sub(coefficient, ring.one()))));
    steps.push_back(par(identity(m), red_pi()));
    steps.push_back(par(identity(m), green(1, 0, ring.one())));
  } else {
    // Left fold of the taps through AND gates.
    for (int remaining = m; remaining > 1; --remaining) {
      steps.push_back(par(identity(m), beside(identity(remaining - 2), and_gate())));
    }
    steps.push_back(par(identity(m), green(1, 0, coefficient)));
  }
  return compose(steps);
}

std::vector<ExponentSet> nonempty_subsets(int wires) {
  std::vector<ExponentSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << wires); ++mask) {
    ExponentSet s;
    for (int k = 0; k < wires; ++k) {
      if (mask & (std::size_t{1} << k)) s.push_back(k);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ExponentSet& a, const ExponentSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace zxalg
