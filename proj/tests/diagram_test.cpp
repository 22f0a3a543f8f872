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

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zxalg/error.hpp"
#include "zxalg/interp.hpp"

namespace zxalg {
namespace {

const Ring kZ = Ring::integers();

TEST(DiagramTest, TypesCompose) {
  Diagram d = seq(green(1, 2, kZ.one()), par(triangle(), red(1, 3)));
  EXPECT_EQ(d.type(), (DiagramType{1, 4}));
  EXPECT_EQ(to_string(d.type()), "1->4");
  EXPECT_THROW(seq(red(2, 1), red(2, 1)), TypeError);
  EXPECT_EQ(Diagram().type(), (DiagramType{0, 0}));
  EXPECT_EQ(tensor({}), Diagram());
  EXPECT_EQ(power(triangle(), 3).type(), (DiagramType{3, 3}));
}

TEST(DiagramTest, StructuralEquality) {
  EXPECT_EQ(green(1, 1, kZ.from_int(2)), green(1, 1, kZ.from_int(2)));
  EXPECT_FALSE(green(1, 1, kZ.from_int(2)) == green(1, 1, kZ.from_int(3)));
  EXPECT_FALSE(seq(seq(triangle(), red_pi()), triangle()) == seq(triangle(), seq(red_pi(), triangle())));
}

TEST(DiagramTest, RegimeValidation) {
  Ring nat = Ring::naturals();
  EXPECT_THROW(validate(hadamard(), nat), RegimeError);
  EXPECT_THROW(validate(seq(triangle(), triangle_inv()), nat), RegimeError);
  EXPECT_NO_THROW(validate(seq(par(triangle(), triangle()), and_gate()), nat));
  EXPECT_THROW(make_generator(GeneratorKind::triangle_inv, {}, nat), RegimeError);
  EXPECT_THROW(make_generator(GeneratorKind::green, {1, 1, std::nullopt}, nat), DomainError);
  // A phase from another ring is rejected.
  EXPECT_THROW(validate(green(1, 1, Ring::tropical().one()), nat), DomainError);
}

TEST(DiagramTest, PermutationRoutesWires) {
  std::vector<int> target{2, 0, 3, 1};
  DenseMatrix m = evaluate(permutation(target), kZ);
  for (std::size_t x = 0; x < 16; ++x) {
    std::size_t y = 0;
    for (int i = 0; i < 4; ++i) {
      std::size_t bit = (x >> (3 - i)) & 1u;
      y |= bit << (3 - target[i]);
    }
    for (std::size_t r = 0; r < 16; ++r) EXPECT_EQ(m(r, x), r == y ? kZ.one() : kZ.zero());
  }
}

TEST(DiagramTest, TransposeAndFlipMatchMatrixTranspose) {
  std::mt19937_64 rng(11);
  for (const char* name : {"int", "nat", "poly-int:a"}) {
    Ring ring = Ring::parse(name);
    for (int i = 0; i < 40; ++i) {
      Diagram d = testing::random_diagram(ring, rng, testing::pick(rng, 0, 3), testing::pick(rng, 0, 3), 6);
      DenseMatrix t = transpose_matrix(evaluate(d, ring));
      EXPECT_EQ(evaluate(transpose(d), ring), t);
      EXPECT_EQ(evaluate(flip(d), ring), t);
    }
  }
}

TEST(DiagramTest, BendAndUnbendAreInverse) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    int n = testing::pick(rng, 0, 2), m = testing::pick(rng, 0, 2);
    Diagram d = testing::random_diagram(kZ, rng, n, m, 5);
    Diagram state = bend_to_state(d);
    EXPECT_EQ(state.type(), (DiagramType{0, n + m}));
    EXPECT_EQ(evaluate(state, kZ), vec(evaluate(d, kZ)));
    EXPECT_EQ(evaluate(unbend_to_map(state, n, m), kZ), evaluate(d, kZ));
  }
  EXPECT_THROW(unbend_to_map(red(0, 3), 1, 1), DomainError);
}

TEST(DiagramTest, MacrosExpandToTheirMeaning) {
  for (const char* name : {"int", "mod:6"}) {
    Ring ring = Ring::parse(name);
    EXPECT_EQ(evaluate(and_ring_expansion(ring), ring), evaluate(and_gate(), Ring::parse(name)));
    Diagram expanded = expand_macros(and_gate(), ring);
    bool macro_left = false;
    for_each_generator(expanded, [&](const Generator& g) { macro_left |= g.is_macro(); });
    EXPECT_FALSE(macro_left);
  }
  Ring nat = Ring::naturals();
  Diagram kept = expand_macros(seq(copy_gate(2), and_gate()), nat);
  int ands = 0;
  for_each_generator(kept, [&](const Generator& g) { ands += g.kind == GeneratorKind::and_gate; });
  EXPECT_EQ(ands, 1);
  MacroOptions strict;
  strict.forbid_primitive_and = true;
  EXPECT_THROW(expand_macros(and_gate(), nat, strict), RegimeError);
  EXPECT_EQ(evaluate(xor_gate(), kZ), evaluate(red(2, 1), kZ));
  EXPECT_EQ(evaluate(not_gate(), kZ), evaluate(red_pi(), kZ));
  EXPECT_EQ(evaluate(copy_gate(3), kZ), evaluate(green(1, 3, kZ.one()), kZ));
}

TEST(DiagramTest, RedSpiderPhases) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      DenseMatrix d = evaluate(red_spider(n, m, true), kZ);
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
          bool odd = (__builtin_popcountll(r) + __builtin_popcountll(c)) % 2 == 1;
          EXPECT_EQ(d(r, c), odd ? kZ.one() : kZ.zero()) << n << "->" << m;
        }
    }
}

TEST(DiagramTest, PhaseMapAndCounts) {
  Diagram d = seq(green(1, 2, kZ.from_int(2)), par(gbox(kZ.from_int(3)), identity()));
  EXPECT_EQ(leaf_count(d), 3u);
  Diagram doubled = map_phases(d, [](const Element& e) { return kZ.mul(e, kZ.from_int(2)); });
  EXPECT_EQ(doubled, seq(green(1, 2, kZ.from_int(4)), par(gbox(kZ.from_int(6)), identity())));
}

}  // namespace
}  // namespace zxalg
