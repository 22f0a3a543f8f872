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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "zxalg/error.hpp"

namespace zxalg {
namespace {

std::vector<Element> random_vector(const Ring& ring, std::mt19937_64& rng, int m) {
  std::vector<Element> v;
  for (int i = 0; i < (1 << m); ++i) v.push_back(ring.random(rng));
  return v;
}

TEST(NormalFormTest, RoundTripOnInstances) {
  std::mt19937_64 rng(17);
  for (const char* name : {"int", "mod:6", "bool", "tropical", "nat"}) {
    Ring ring = Ring::parse(name);
    for (int m = 0; m <= 3; ++m)
      for (int i = 0; i < 5; ++i) {
        std::vector<Element> v = random_vector(ring, rng, m);
        EXPECT_EQ(evaluate(synthesize_state(ring, v), ring), DenseMatrix::column(v)) << name << " m=" << m;
      }
  }
}

TEST(NormalFormTest, SymbolicRoundTrip) {
  for (const char* name : {"poly-int:a0,a1,a2,a3", "poly-nat:a0,a1,a2,a3"}) {
    Ring ring = Ring::parse(name);
    for (int m = 0; m <= 2; ++m) {
      std::vector<Element> v;
      for (int i = 0; i < (1 << m); ++i) v.push_back(ring.variable("a" + std::to_string(i)));
      EXPECT_EQ(evaluate(synthesize_state(ring, v), ring), DenseMatrix::column(v)) << name << " m=" << m;
    }
  }
}

TEST(NormalFormTest, StructureOfTheForm) {
  Ring z = Ring::integers();
  for (int m = 1; m <= 3; ++m) {
    std::vector<Element> v((std::size_t{1} << m), z.zero());
    v.back() = z.one();
    NormalForm nf = normal_form(z, v);
    EXPECT_EQ(nf.spec.gadget_count(), (std::size_t{1} << m) - 1);
    ASSERT_EQ(nf.parts.size(), (std::size_t{1} << m) + 1);
    EXPECT_EQ(nf.parts.front().first, "base");
    EXPECT_EQ(nf.parts.back().first, "mult");
    EXPECT_EQ(nf.parts[1].first, "add[0]");
    EXPECT_EQ(evaluate(nf.diagram, z), DenseMatrix::column(v));
  }
  NormalForm scalar = normal_form(z, {z.from_int(5)});
  EXPECT_EQ(scalar.parts.size(), 1u);
  EXPECT_EQ(scalar.parts.front().first, "scalar");
  EXPECT_EQ(format_matrix(z, evaluate(scalar.diagram, z)), "1 1\n5\n");
  EXPECT_THROW(normal_form(z, {z.one(), z.one(), z.one()}), DomainError);
}

TEST(NormalFormTest, DistinctVectorsGiveDistinctForms) {
  Ring z = Ring::integers();
  std::vector<Element> v{z.from_int(1), z.from_int(2)}, w{z.from_int(1), z.from_int(3)};
  EXPECT_FALSE(synthesize_state(z, v) == synthesize_state(z, w));
  EXPECT_NE(evaluate(synthesize_state(z, v), z), evaluate(synthesize_state(z, w), z));
}

TEST(NormalFormTest, Universality) {
  std::mt19937_64 rng(23);
  for (const char* name : {"int", "nat", "bool", "tropical", "mod:6"}) {
    Ring ring = Ring::parse(name);
    for (auto [rows, cols] : {std::pair{4, 4}, std::pair{2, 8}, std::pair{1, 1}, std::pair{2, 1}}) {
      std::vector<Element> e;
      for (int i = 0; i < rows * cols; ++i) e.push_back(ring.random(rng));
      DenseMatrix a(rows, cols, e);
      Diagram d = synthesize_map(ring, a);
      EXPECT_EQ(evaluate(d, ring), a) << name;
    }
  }
  Ring z = Ring::integers();
  DenseMatrix h(2, 2, std::vector<Element>{z.one(), z.one(), z.one(), z.from_int(-1)});
  Diagram built = synthesize_map(z, h);
  bool uses_h = false;
  for_each_generator(built, [&](const Generator& g) { uses_h |= g.kind == GeneratorKind::hadamard; });
  EXPECT_FALSE(uses_h);
  EXPECT_EQ(evaluate(built, z), h);
  Ring nat = Ring::naturals();
  EXPECT_EQ(evaluate(synthesize_map(nat, evaluate(and_gate(), nat)), nat), evaluate(and_gate(), nat));
  EXPECT_THROW(synthesize_map(z, DenseMatrix::zeros(z, 3, 2)), DomainError);
}

TEST(NormalFormTest, NormalizeIsACongruence) {
  Ring z = Ring::integers();
  EXPECT_EQ(normalize(seq(red_pi(), red_pi()), z), normalize(identity(), z));
  Ring nat = Ring::naturals();
  EXPECT_EQ(normalize(seq(red(0, 1), green(1, 2, nat.one())), nat), normalize(power(red(0, 1), 2), nat));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 25; ++i) {
    Diagram a = testing::random_diagram(z, rng, 1, 1, 4), b = testing::random_diagram(z, rng, 1, 1, 4);
    Diagram na = normalize(a, z);
    EXPECT_EQ(normalize(na, z), na);
    EXPECT_TRUE(diagram_equal(a, na, z));
    EXPECT_EQ(diagram_equal(a, b, z).equal, normalize(a, z) == normalize(b, z));
  }
}

TEST(NormalFormTest, EqualityVerdicts) {
  Ring z = Ring::integers();
  EXPECT_TRUE(diagram_equal(seq(green(1, 2, z.one()), red(2, 1)), seq(green(1, 0, z.one()), red(0, 1)), z));
  EqualityVerdict v = diagram_equal(triangle(), seq(triangle(), red_pi()), z);
  EXPECT_FALSE(v.equal);
  EXPECT_NE(v.reason.find("value"), std::string::npos);
  EqualityVerdict t = diagram_equal(identity(), swap_wires(), z);
  EXPECT_FALSE(t.equal);
  EXPECT_EQ(t.reason.rfind("type", 0), 0u);
}

TEST(NormalFormTest, TensorOfNormalForms) {
  Ring z = Ring::integers();
  auto a = normal_form(z, {z.from_int(2)}), b = normal_form(z, {z.from_int(3)});
  CompletenessResult r = tensor_of_normal_forms(z, a, b);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(format_matrix(z, r.result_value), "1 1\n6\n");
  auto c = normal_form(z, {z.from_int(1), z.from_int(2)});
  auto d = normal_form(z, {z.from_int(3), z.from_int(4), z.from_int(5), z.from_int(6)});
  CompletenessResult r2 = tensor_of_normal_forms(z, c, d);
  EXPECT_TRUE(r2.verified);
  EXPECT_EQ(r2.result.spec.wires, 3);
}

TEST(NormalFormTest, SelfPlugging) {
  Ring z = Ring::integers();
  auto nf = normal_form(z, {z.from_int(1), z.from_int(2), z.from_int(3), z.from_int(4)});
  CompletenessResult r = self_plug(z, nf, 0, 1);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.result.spec.wires, 0);
  EXPECT_EQ(format_matrix(z, r.result_value), "1 1\n5\n");
  EXPECT_THROW(self_plug(z, nf, 0, 0), DomainError);
  EXPECT_THROW(self_plug(z, nf, 0, 2), DomainError);
}

TEST(NormalFormTest, GeneratorsAndScalars) {
  Ring z = Ring::integers();
  CompletenessResult r = generator_to_normal_form(z, red(0, 1));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.result.diagram, synthesize_state(z, {z.one(), z.zero()}));
  CompletenessResult s = scalar_to_normal_form(z, seq(cap(), cup()));
  EXPECT_TRUE(s.verified);
  EXPECT_EQ(format_matrix(z, s.result_value), "1 1\n2\n");
  EXPECT_THROW(scalar_to_normal_form(z, triangle()), DomainError);
}

}  // namespace
}  // namespace zxalg
