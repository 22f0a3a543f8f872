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

#include <gtest/gtest.h>

#include "golden.hpp"
#include "test_support.hpp"
#include "zxalg/error.hpp"
#include "zxalg/io.hpp"

namespace zxalg {
namespace {

TEST(InterpTest, GoldenGeneratorMatrices) {
  auto cases = testing::load_golden(std::string(ZXALG_TEST_DATA) + "/generators.golden");
  ASSERT_GE(cases.size(), 25u);
  for (const auto& c : cases) {
    Ring ring = Ring::parse(c.ring);
    DenseMatrix expected = parse_matrix(c.matrix, ring);
    EXPECT_EQ(evaluate(parse_diagram(c.term, ring), ring), expected) << c.term << " over " << c.ring;
  }
}

TEST(InterpTest, GreenSpiderFormula) {
  Ring p = Ring::parse("poly-int:a");
  Element a = p.variable("a");
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      DenseMatrix d = evaluate(green(n, m, a), p);
      ASSERT_EQ(d.rows(), std::size_t{1} << m);
      ASSERT_EQ(d.cols(), std::size_t{1} << n);
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
          Element want = p.zero();
          if (r == 0 && c == 0) want = p.one();
          if (r == d.rows() - 1 && c == d.cols() - 1) want = p.add(want, a);
          EXPECT_EQ(d(r, c), want);
        }
    }
}

TEST(InterpTest, RedSpiderIsParity) {
  Ring z = Ring::integers();
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      DenseMatrix d = evaluate(red(n, m), z);
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
          EXPECT_EQ(d(r, c), (__builtin_popcountll(r) + __builtin_popcountll(c)) % 2 == 0 ? z.one() : z.zero());
    }
}

TEST(InterpTest, CompositionLaws) {
  Ring z = Ring::integers();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    Diagram a = testing::random_diagram(z, rng, 1, 2, 3);
    Diagram b = testing::random_diagram(z, rng, 2, 1, 3);
    EXPECT_EQ(evaluate(seq(a, b), z), matmul(z, evaluate(b, z), evaluate(a, z)));
    EXPECT_EQ(evaluate(par(a, b), z), kron(z, evaluate(a, z), evaluate(b, z)));
  }
}

TEST(InterpTest, SemiringsKeepTheAndBox) {
  Ring b = Ring::booleans();
  DenseMatrix m = evaluate(seq(par(triangle(), triangle()), and_gate()), b);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 4u);
  Ring t = Ring::tropical();
  EXPECT_EQ(evaluate(seq(cap(), cup()), t), DenseMatrix(1, 1, std::vector<Element>{t.one()}));
  EXPECT_EQ(format_matrix(Ring::booleans(), evaluate(seq(cap(), cup()), b)), "1 1\n1\n");
}

TEST(InterpTest, RegimeAndSizeErrors) {
  EXPECT_THROW(evaluate(triangle_inv(), Ring::naturals()), RegimeError);
  EXPECT_THROW(evaluate(hadamard(), Ring::tropical()), RegimeError);
  EXPECT_THROW(evaluate(red(0, 21), Ring::integers()), DomainError);
  Ring z = Ring::integers();
  EXPECT_THROW(matmul(z, DenseMatrix::zeros(z, 2, 3), DenseMatrix::zeros(z, 2, 3)), DomainError);
}

TEST(InterpTest, VecAndUnvec) {
  Ring z = Ring::integers();
  DenseMatrix a(2, 2, std::vector<Element>{z.from_int(1), z.from_int(2), z.from_int(3), z.from_int(4)});
  DenseMatrix v = vec(a);
  EXPECT_EQ(format_matrix(z, v), "4 1\n1\n3\n2\n4\n");
  EXPECT_EQ(unvec(v, 2, 2), a);
  EXPECT_EQ(transpose_matrix(transpose_matrix(a)), a);
  EXPECT_EQ(exact_log2(8), 3);
  EXPECT_FALSE(exact_log2(6).has_value());
}

TEST(InterpTest, FirstDifference) {
  Ring z = Ring::integers();
  DenseMatrix a = DenseMatrix::identity(z, 2), b = a;
  EXPECT_FALSE(first_difference(a, b).has_value());
  b(1, 0) = z.from_int(9);
  auto at = first_difference(a, b);
  ASSERT_TRUE(at.has_value());
  EXPECT_EQ(*at, (std::pair<std::size_t, std::size_t>{1, 0}));
}

}  // namespace
}  // namespace zxalg
