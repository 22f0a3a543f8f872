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

// Elementary-matrix gadgets on m wires: row addition A_j and row
// multiplication M, each with a direct matrix oracle.
//
// Subsets are sets of bit exponents k in [0, m); exponent k lives on wire
// m - 1 - k. A row addition with subset S puts its coefficient in row
// j = 2^m - 1 - sum_{k in S} 2^k of the last column.

#include <vector>

#include "zxalg/algebra.hpp"
#include "zxalg/diagram.hpp"
#include "zxalg/interp.hpp"

namespace zxalg {

using ExponentSet = std::vector<int>;

/// Row index j addressed by a nonempty exponent set; DomainError otherwise.
std::size_t row_index(int wires, const ExponentSet& exponents);

DenseMatrix row_add_matrix(const Ring& ring, int wires, const ExponentSet& exponents, const Element& coefficient);
DenseMatrix row_mult_matrix(const Ring& ring, int wires, const Element& coefficient);

/// Taps every wire through a triangle into one green node carrying the
/// coefficient, copies the result and XORs it onto the wires in `exponents`.
/// Uses semiring-valid generators only.
Diagram row_add_gadget(const Ring& ring, int wires, const ExponentSet& exponents, const Element& coefficient);

/// diag(1, ..., 1, a). Over rings the taps meet a green node with phase a - 1
/// that is read out through P and the effect <0| + <1|; over semirings the
/// taps are ANDed together and read out through <0| + a<1|.
Diagram row_mult_gadget(const Ring& ring, int wires, const Element& coefficient);

/// Every nonempty exponent set on `wires` wires, ordered by size and then
/// lexicographically.
std::vector<ExponentSet> nonempty_subsets(int wires);

}  // namespace zxalg
