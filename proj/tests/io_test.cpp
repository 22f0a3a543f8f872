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

#include "zxalg/io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "zxalg/error.hpp"

namespace zxalg {
namespace {

const Ring kZ = Ring::integers();

TEST(DiagramTextTest, ParsesGenerators) {
  EXPECT_EQ(parse_diagram("Z(1,2)", kZ), green(1, 2, kZ.one()));
  EXPECT_EQ(parse_diagram("Z(0,1,-3)", kZ), green(0, 1, kZ.from_int(-3)));
  EXPECT_EQ(parse_diagram("X(1,1,pi)", kZ), red_spider(1, 1, true));
  EXPECT_EQ(parse_diagram("X(2,0,0)", kZ), red(2, 0));
  EXPECT_EQ(parse_diagram("id(3)", kZ), identity(3));
  EXPECT_EQ(parse_diagram("empty", kZ), Diagram());
  EXPECT_EQ(parse_diagram("copy(3)", kZ), copy_gate(3));
  Ring p = Ring::parse("poly-int:a,b");
  EXPECT_EQ(parse_diagram("gbox(a*b - 1)", p), gbox(p.parse_element("a*b-1")));
}

TEST(DiagramTextTest, Precedence) {
  Diagram d = parse_diagram("T | P ; swap", kZ);
  EXPECT_EQ(d, seq(par(triangle(), red_pi()), swap_wires()));
  EXPECT_EQ(parse_diagram("T ; P ; H", kZ), seq(seq(triangle(), red_pi()), hadamard()));
  EXPECT_EQ(parse_diagram("T | (P ; H)", kZ), par(triangle(), seq(red_pi(), hadamard())));
  EXPECT_EQ(parse_diagram("# comment\n  cap ; # trailing\n cup", kZ), seq(cap(), cup()));
}

TEST(DiagramTextTest, ErrorsCarryPositions) {
  auto position_of = [](const std::string& text) {
    try {
      parse_diagram(text, kZ);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  EXPECT_EQ(position_of("T ; Q"), (std::pair{1, 5}));
  EXPECT_EQ(position_of("T ;\n  X(2,1)"), (std::pair{2, 3}));
  EXPECT_EQ(position_of("Z(1,x)").first, 1);
  EXPECT_EQ(position_of("(T ; P"), (std::pair{1, 7}));
  EXPECT_EQ(position_of("T T").second, 3);
  EXPECT_EQ(position_of("").first, 1);
  EXPECT_THROW(parse_diagram("Z(1,1,1.5)", kZ), ParseError);
  EXPECT_THROW(parse_diagram("X(1,1,2)", kZ), ParseError);
}

TEST(DiagramTextTest, PrintParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (const char* name : {"int", "nat", "bool", "mod:6", "tropical", "poly-int:a,b", "poly-nat:a"}) {
    Ring ring = Ring::parse(name);
    for (int i = 0; i < 40; ++i) {
      Diagram d = testing::random_diagram(ring, rng, testing::pick(rng, 0, 3), testing::pick(rng, 0, 3), 8);
      std::string text = format_diagram(d, ring);
      EXPECT_EQ(parse_diagram(text, ring), d) << text;
    }
  }
}

TEST(MatrixTextTest, ParseAndRoundTrip) {
  DenseMatrix m = parse_matrix("2 2\n1 1\n0 1\n", kZ);
  EXPECT_EQ(m, evaluate(triangle(), kZ));
  std::mt19937_64 rng(19);
  for (const char* name : {"int", "nat", "bool", "mod:6", "tropical", "poly-int:a,b", "poly-nat:a"}) {
    Ring ring = Ring::parse(name);
    std::vector<Element> e;
    for (int i = 0; i < 8; ++i) e.push_back(ring.random(rng));
    DenseMatrix a(2, 4, e);
    EXPECT_EQ(parse_matrix(format_matrix(ring, a), ring), a) << name;
  }
  EXPECT_THROW(parse_matrix("2 2\n1 1\n0\n", kZ), ParseError);
  EXPECT_THROW(parse_matrix("2 x\n", kZ), ParseError);
  try {
    parse_matrix("1 2\n1 z\n", kZ);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(DerivationTextTest, Parses) {
  Derivation d = parse_derivation(
      "# demo\nstart: T ; Tinv\nrule Inv at root -> id\nrule S1 at 1.0 with n=1, k=0 ,m=1,a=2,b=3 -> id\n"
      "semantic -> id\n",
      kZ);
  EXPECT_EQ(d.start, seq(triangle(), triangle_inv()));
  ASSERT_EQ(d.steps.size(), 3u);
  EXPECT_EQ(d.steps[0].rule, "Inv");
  EXPECT_EQ(d.steps[1].position, (Position{1, 0}));
  EXPECT_EQ(d.steps[1].arguments.at("k"), "0");
  EXPECT_EQ(d.steps[1].arguments.at("m"), "1");
  EXPECT_EQ(d.steps[1].line, 4);
  EXPECT_TRUE(d.steps[2].rule.empty());
  Derivation trailing = parse_derivation("start: T\nrule S1 with n=1, k=0,m=1 at 0.1 -> T\n", kZ);
  EXPECT_EQ(trailing.steps[0].position, (Position{0, 1}));
  EXPECT_EQ(trailing.steps[0].arguments.size(), 3u);
  EXPECT_EQ(trailing.steps[0].arguments.at("m"), "1");
  EXPECT_THROW(parse_derivation("rule Inv -> id\n", kZ), ParseError);
  EXPECT_THROW(parse_derivation("start: T\nrule Inv\n", kZ), ParseError);
  EXPECT_THROW(parse_derivation("start: T\nwhatever -> T\n", kZ), ParseError);
  try {
    parse_derivation("start: T\nsemantic -> T ; Q\n", kZ);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 17);
  }
}

TEST(FixtureTextTest, Parses) {
  auto fixtures = parse_fixtures(read_file(std::string(ZXALG_TEST_DATA) + "/lemmas.fix"), kZ);
  ASSERT_EQ(fixtures.size(), 2u);
  EXPECT_EQ(fixtures[0].name, "hopf");
  EXPECT_EQ(fixtures[1].lhs, hadamard());
  EXPECT_THROW(parse_fixtures("[x]\nlhs: T\n", kZ), ParseError);
  EXPECT_THROW(parse_fixtures("lhs: T\n", kZ), ParseError);
  EXPECT_THROW(read_file("/nonexistent/file"), DomainError);
}

}  // namespace
}  // namespace zxalg
