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

#include "zxalg/interp.hpp"

#include <bit>

#include "zxalg/error.hpp"

namespace zxalg {

namespace {

constexpr int kMaxWires = 20;

std::size_t dim(int wires) {
  if (wires > kMaxWires) throw DomainError("boundary of " + std::to_string(wires) + " wires is too wide to evaluate densely");
  return std::size_t{1} << wires;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Element fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DomainError("matrix entry count does not match its dimensions");
}

DenseMatrix DenseMatrix::zeros(const Ring& ring, std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, cols, ring.zero());
}

DenseMatrix DenseMatrix::identity(const Ring& ring, std::size_t n) {
  DenseMatrix m = zeros(ring, n, n);
  const Element one = ring.one();
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

DenseMatrix DenseMatrix::column(std::vector<Element> entries) {
  const std::size_t n = entries.size();
  return DenseMatrix(n, 1, std::move(entries));
}

DenseMatrix matmul(const Ring& ring, const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("matmul dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  DenseMatrix out = DenseMatrix::zeros(ring, a.rows(), b.cols());
  std::vector<bool> b_nonzero(b.entries().size());
  for (std::size_t i = 0; i < b_nonzero.size(); ++i) b_nonzero[i] = !ring.is_zero(b.entries()[i]);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      const bool unit = ring.is_one(aik);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b_nonzero[k * b.cols() + j]) continue;
        out(i, j) = ring.add(out(i, j), unit ? b(k, j) : ring.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

DenseMatrix kron(const Ring& ring, const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out = DenseMatrix::zeros(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Element& aij = a(i, j);
      if (ring.is_zero(aij)) continue;
      const bool unit = ring.is_one(aij);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = unit ? b(k, l) : ring.mul(aij, b(k, l));
        }
      }
    }
  }
  return out;
}

bool equal(const DenseMatrix& a, const DenseMatrix& b) { return a == b; }

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const DenseMatrix& a,
                                                                     const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!(a(r, c) == b(r, c))) return std::pair{r, c};
    }
  }
  return std::nullopt;
}

DenseMatrix transpose_matrix(const DenseMatrix& a) {
  std::vector<Element> entries;
  entries.reserve(a.entries().size());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) entries.push_back(a(r, c));
  }
  return DenseMatrix(a.cols(), a.rows(), std::move(entries));
}

DenseMatrix vec(const DenseMatrix& a) {
  std::vector<Element> entries;
  entries.reserve(a.entries().size());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) entries.push_back(a(r, c));
  }
  return DenseMatrix::column(std::move(entries));
}

DenseMatrix unvec(const DenseMatrix& column, std::size_t rows, std::size_t cols) {
  if (column.cols() != 1 || column.rows() != rows * cols) throw DomainError("unvec dimension mismatch");
  DenseMatrix out(rows, cols, column(0, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = column(c * rows + r, 0);
  }
  return out;
}

DenseMatrix substitute(const Ring& source, const DenseMatrix& m,
                       const std::map<std::string, Element>& assignment, const Ring& target) {
  std::vector<Element> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.push_back(substitute(source, e, assignment, target));
  return DenseMatrix(m.rows(), m.cols(), std::move(entries));
}

std::string format_matrix(const Ring& ring, const DenseMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += ring.format(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::optional<int> exact_log2(std::size_t value) {
  if (value == 0 || !std::has_single_bit(value)) return std::nullopt;
  return std::countr_zero(value);
}

// ---------------------------------------------------------------------------

namespace {

DenseMatrix from_ints(const Ring& ring, std::size_t rows, std::size_t cols, std::initializer_list<int> values) {
  std::vector<Element> entries;
  entries.reserve(values.size());
  for (int v : values) entries.push_back(ring.from_int(v));
  return DenseMatrix(rows, cols, std::move(entries));
}

DenseMatrix green_matrix(const Ring& ring, int n, int m, const Element& phase) {
  DenseMatrix out = DenseMatrix::zeros(ring, dim(m), dim(n));
  out(0, 0) = ring.one();
  const std::size_t last_row = out.rows() - 1;
  const std::size_t last_col = out.cols() - 1;
  out(last_row, last_col) = ring.add(out(last_row, last_col), phase);
  return out;
}

DenseMatrix red_matrix(const Ring& ring, int n, int m) {
  DenseMatrix out = DenseMatrix::zeros(ring, dim(m), dim(n));
  const Element one = ring.one();
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      if ((std::popcount(r) + std::popcount(c)) % 2 == 0) out(r, c) = one;
    }
  }
  return out;
}

}  // namespace

DenseMatrix interpret_generator(const Generator& g, const Ring& ring) {
  if (g.ring_only() && ring.regime() == Regime::semiring) {
    throw RegimeError("generator needs additive inverses; not available over semiring " + ring.name());
  }
  switch (g.kind) {
    case GeneratorKind::green: return green_matrix(ring, g.inputs, g.outputs, *g.phase);
    case GeneratorKind::gbox: return green_matrix(ring, 1, 1, *g.phase);
    case GeneratorKind::copy: return green_matrix(ring, 1, g.outputs, ring.one());
    case GeneratorKind::red: return red_matrix(ring, g.inputs, g.outputs);
    case GeneratorKind::xor_gate: return red_matrix(ring, 2, 1);
    case GeneratorKind::hadamard: return from_ints(ring, 2, 2, {1, 1, 1, -1});
    case GeneratorKind::triangle: return from_ints(ring, 2, 2, {1, 1, 0, 1});
    case GeneratorKind::triangle_inv: return from_ints(ring, 2, 2, {1, -1, 0, 1});
    case GeneratorKind::red_pi:
    case GeneratorKind::not_gate:
      return from_ints(ring, 2, 2, {0, 1, 1, 0});
    case GeneratorKind::swap: return from_ints(ring, 4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    case GeneratorKind::cap: return from_ints(ring, 4, 1, {1, 0, 0, 1});
    case GeneratorKind::cup: return from_ints(ring, 1, 4, {1, 0, 0, 1});
    case GeneratorKind::identity: return DenseMatrix::identity(ring, dim(g.inputs));
    case GeneratorKind::and_gate: return from_ints(ring, 2, 4, {1, 1, 1, 0, 0, 0, 0, 1});
  }
  throw DomainError("unknown generator");
}

namespace {

bool is_identity_leaf(const Diagram& d) {
  return d.is_generator() && d.generator().kind == GeneratorKind::identity;
}

// [[d]] * x, computed without forming Kronecker products: a parallel
// composition acts on x as (I (x) B) then (A (x) I), each done by one
// recursive call on a reshaped operand.
DenseMatrix apply(const Diagram& d, DenseMatrix x, const Ring& ring) {
  switch (d.shape()) {
    case Diagram::Shape::generator:
      if (is_identity_leaf(d)) return x;
      return matmul(ring, interpret_generator(d.generator(), ring), x);
    case Diagram::Shape::seq:
      return apply(d.rhs(), apply(d.lhs(), std::move(x), ring), ring);
    case Diagram::Shape::par:
      break;
  }
  const Diagram& a = d.lhs();
  const Diagram& b = d.rhs();
  const std::size_t c = x.cols();
  const std::size_t in_a = dim(a.inputs()), in_b = dim(b.inputs());
  const std::size_t out_a = dim(a.outputs()), out_b = dim(b.outputs());
  dim(d.outputs());

  DenseMatrix y;
  if (is_identity_leaf(b)) {
    y = std::move(x);
  } else if (b.inputs() == 0) {
    // A state: evaluate it once as a column and tensor it in.
    DenseMatrix r = apply(b, DenseMatrix::identity(ring, 1), ring);
    y = DenseMatrix::zeros(ring, in_a * out_b, c);
    for (std::size_t ra = 0; ra < in_a; ++ra)
      for (std::size_t rb = 0; rb < out_b; ++rb) {
        if (ring.is_zero(r(rb, 0))) continue;
        for (std::size_t col = 0; col < c; ++col)
          if (!ring.is_zero(x(ra, col))) y(ra * out_b + rb, col) = ring.mul(x(ra, col), r(rb, 0));
      }
  } else {
    // Rows of x are (ra, rb); gather rb as rows and (ra, col) as columns.
    std::vector<Element> gathered(x.entries().size());
    for (std::size_t ra = 0; ra < in_a; ++ra)
      for (std::size_t rb = 0; rb < in_b; ++rb)
        for (std::size_t col = 0; col < c; ++col)
          gathered[rb * (in_a * c) + ra * c + col] = x(ra * in_b + rb, col);
    DenseMatrix r = apply(b, DenseMatrix(in_b, in_a * c, std::move(gathered)), ring);
    std::vector<Element> scattered(out_b * in_a * c);
    for (std::size_t ra = 0; ra < in_a; ++ra)
      for (std::size_t rb = 0; rb < out_b; ++rb)
        for (std::size_t col = 0; col < c; ++col)
          scattered[(ra * out_b + rb) * c + col] = r(rb, ra * c + col);
    y = DenseMatrix(in_a * out_b, c, std::move(scattered));
  }
  if (is_identity_leaf(a)) return y;
  if (a.inputs() == 0) {
    DenseMatrix r = apply(a, DenseMatrix::identity(ring, 1), ring);
    DenseMatrix out = DenseMatrix::zeros(ring, out_a * out_b, c);
    for (std::size_t ra = 0; ra < out_a; ++ra) {
      if (ring.is_zero(r(ra, 0))) continue;
      for (std::size_t rb = 0; rb < out_b; ++rb)
        for (std::size_t col = 0; col < c; ++col)
          if (!ring.is_zero(y(rb, col))) out(ra * out_b + rb, col) = ring.mul(r(ra, 0), y(rb, col));
    }
    return out;
  }
  // Row-major y is already the in_a x (out_b * c) operand of A.
  DenseMatrix z = apply(a, DenseMatrix(in_a, out_b * c, y.entries()), ring);
  return DenseMatrix(out_a * out_b, c, z.entries());
}

}  // namespace

DenseMatrix evaluate(const Diagram& d, const Ring& ring) {
  validate(d, ring);
  dim(d.inputs());
  return apply(expand_macros(d, ring), DenseMatrix::identity(ring, dim(d.inputs())), ring);
}

}  // namespace zxalg
