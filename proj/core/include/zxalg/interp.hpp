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

// The standard interpretation: exact evaluation of diagrams to dense
// 2^m x 2^n matrices over the active (semi)ring.
//
// Basis convention: on an n-wire boundary the basis index of |x_0 ... x_{n-1}>
// is sum_p x_p * 2^(n-1-p), so the leftmost wire is the most significant bit
// and parallel composition is the Kronecker product with the left factor first.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zxalg/algebra.hpp"
#include "zxalg/diagram.hpp"

namespace zxalg {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, Element fill);
  /// Row-major entries; size must be rows * cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static DenseMatrix zeros(const Ring& ring, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(const Ring& ring, std::size_t dim);
  /// Column vector.
  static DenseMatrix column(std::vector<Element> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Element>& entries() const { return entries_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> entries_;
};

/// a * b; DomainError on a dimension mismatch.
DenseMatrix matmul(const Ring& ring, const DenseMatrix& a, const DenseMatrix& b);
/// Kronecker product, `a` most significant.
DenseMatrix kron(const Ring& ring, const DenseMatrix& a, const DenseMatrix& b);
/// Entrywise equality with matching dimensions.
bool equal(const DenseMatrix& a, const DenseMatrix& b);
/// First (row, col) where two equally sized matrices differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const DenseMatrix& a,
                                                                     const DenseMatrix& b);
DenseMatrix transpose_matrix(const DenseMatrix& a);
/// Column-major flattening into a (rows * cols) x 1 column.
DenseMatrix vec(const DenseMatrix& a);
/// Inverse of vec for a column of length rows * cols.
DenseMatrix unvec(const DenseMatrix& column, std::size_t rows, std::size_t cols);

/// Substitutes into every entry of a polynomial matrix; see zxalg::substitute.
DenseMatrix substitute(const Ring& source, const DenseMatrix& m,
                       const std::map<std::string, Element>& assignment, const Ring& target);

std::string format_matrix(const Ring& ring, const DenseMatrix& m);

DenseMatrix interpret_generator(const Generator& g, const Ring& ring);

/// [[d]]: seq composes as [[then]] * [[first]], par as the Kronecker product.
/// Macros are expanded first; the AND box left over a semiring is read as its
/// truth table.
DenseMatrix evaluate(const Diagram& d, const Ring& ring);

/// log2 of a power of two; nullopt otherwise.
std::optional<int> exact_log2(std::size_t value);

}  // namespace zxalg
