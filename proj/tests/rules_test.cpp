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

#include "zxalg/rules.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "zxalg/error.hpp"
#include "zxalg/normalform.hpp"

namespace zxalg {
namespace {

std::set<std::string> names(Regime regime) {
  std::set<std::string> out;
  for (const RewriteRule& r : catalog(regime)) out.insert(r.name());
  return out;
}

TEST(RulesTest, CatalogContents) {
  std::set<std::string> ring = names(Regime::ring), semi = names(Regime::semiring);
  for (const char* n : {"S1", "S2", "S3", "S4", "B1", "B2", "B3", "Ept", "EU", "H", "Bas0", "Bas1", "Suc", "Inv",
                        "Zero", "Pcy", "Sym", "Aso", "Brk", "AD"}) {
    EXPECT_TRUE(ring.count(n)) << n;
    EXPECT_TRUE(ring.count(std::string(n) + "-flip")) << n;
  }
  for (const char* n : {"S1", "S2", "S3", "S4", "B1", "B2", "B1'", "B3", "Ept", "Zero", "Bas0", "Bas1", "Suc", "Pcm",
                        "Tid", "Pcy", "Sym", "Aso", "Brk", "AD", "ASym", "AAs", "Bkp"}) {
    EXPECT_TRUE(semi.count(n)) << n;
    EXPECT_TRUE(semi.count(std::string(n) + "-flip")) << n;
  }
  EXPECT_EQ(ring.size(), 40u);
  EXPECT_EQ(semi.size(), 46u);
  for (const char* n : {"EU", "H", "Inv"}) EXPECT_FALSE(semi.count(n)) << n;
}

TEST(RulesTest, SemiringCatalogUsesNoRingOnlyGenerators) {
  Ring nat = Ring::parse("poly-nat:a,b");
  for (const RewriteRule& rule : catalog(Regime::semiring)) {
    EXPECT_FALSE(rule.ring_only);
    for (const auto& ints : enumerate_int_params(rule.schema, 2)) {
      Bindings b{ints, {}};
      for (const std::string& v : rule.schema.phase_vars) b.phases[v] = nat.variable(v);
      auto [lhs, rhs] = instantiate(rule, nat, b, 2);
      EXPECT_NO_THROW(validate(lhs, nat)) << rule.name();
      EXPECT_NO_THROW(validate(rhs, nat)) << rule.name();
    }
  }
}

TEST(RulesTest, InstantiateExamples) {
  Ring p = Ring::parse("poly-int:a,b");
  auto s1 = *find_rule(Regime::ring, "S1");
  Bindings b{{{"n", 1}, {"k", 0}, {"m", 1}}, {{"a", p.variable("a")}, {"b", p.variable("b")}}};
  auto [lhs, rhs] = instantiate(s1, p, b);
  EXPECT_EQ(lhs, seq(green(1, 1, p.variable("a")), green(1, 1, p.variable("b"))));
  EXPECT_EQ(format_matrix(p, evaluate(rhs, p)), "2 2\n1 0\n0 a*b\n");

  Ring z = Ring::integers();
  auto inv = instantiate(*find_rule(Regime::ring, "Inv"), z, {});
  EXPECT_EQ(evaluate(inv.first, z), DenseMatrix::identity(z, 2));

  auto s4 = *find_rule(Regime::ring, "S4");
  auto pp = instantiate(s4, z, {{{"n", 1}, {"m", 1}, {"s", 1}, {"t", 1}}, {}});
  EXPECT_EQ(pp.second, red(1, 1));
  EXPECT_EQ(evaluate(pp.first, z), DenseMatrix::identity(z, 2));
}

TEST(RulesTest, InstantiateErrors) {
  Ring z = Ring::integers();
  auto s1 = *find_rule(Regime::ring, "S1");
  EXPECT_THROW(instantiate(s1, z, {{{"n", 1}, {"k", 0}}, {{"a", z.one()}, {"b", z.one()}}}), DomainError);
  EXPECT_THROW(instantiate(s1, z, {{{"n", 1}, {"k", 0}, {"m", 9}}, {{"a", z.one()}, {"b", z.one()}}}, 3),
               DomainError);
  EXPECT_THROW(instantiate(s1, z, {{{"n", 1}, {"k", 0}, {"m", 1}}, {{"a", z.one()}}}), DomainError);
  EXPECT_THROW(instantiate(*find_rule(Regime::ring, "EU"), Ring::naturals(), {}), RegimeError);
  EXPECT_FALSE(find_rule(Regime::semiring, "EU").has_value());
}

TEST(RulesTest, SymbolicSoundnessOfBothCatalogs) {
  for (Regime regime : {Regime::ring, Regime::semiring}) {
    for (const SoundnessReport& rep : check_catalog(regime, symbolic_ring(regime), 3)) {
      EXPECT_TRUE(rep.passed()) << rep.name;
      EXPECT_FALSE(rep.instances.empty());
    }
  }
}

TEST(RulesTest, FlipsPassIffOriginalsPass) {
  Ring p = Ring::parse("poly-int:a,b");
  for (const RewriteRule& rule : catalog(Regime::ring)) {
    if (!rule.flipped) continue;
    auto original = *find_rule(Regime::ring, rule.base_name);
    EXPECT_EQ(check_soundness(rule, p, 2).passed(), check_soundness(original, p, 2).passed());
    // The flipped sides are the transposes of the original sides.
    for (const auto& ints : enumerate_int_params(rule.schema, 1)) {
      Bindings b{ints, {}};
      for (const std::string& v : rule.schema.phase_vars) b.phases[v] = p.variable(v);
      auto f = instantiate(rule, p, b);
      auto o = instantiate(original, p, b);
      EXPECT_EQ(evaluate(f.first, p), transpose_matrix(evaluate(o.first, p))) << rule.name();
    }
  }
}

TEST(RulesTest, SampledInstancesAgreeWithSymbolicVerdict) {
  for (const char* name : {"int", "mod:6"}) {
    for (const SoundnessReport& rep : check_catalog(Regime::ring, Ring::parse(name), 2)) EXPECT_TRUE(rep.passed()) << rep.name;
  }
  for (const char* name : {"bool", "tropical", "nat"}) {
    for (const SoundnessReport& rep : check_catalog(Regime::semiring, Ring::parse(name), 2))
      EXPECT_TRUE(rep.passed()) << rep.name << " over " << name;
  }
}

TEST(RulesTest, CorruptedRuleIsCaught) {
  Schema bad{"S1-corrupt", {}, {"a", "b"}, [](const Ring& r, const Bindings& b) {
               Element a = b.phases.at("a"), c = b.phases.at("b");
               return std::pair{seq(gbox(a), gbox(c)), gbox(r.add(a, c))};
             }};
  SoundnessReport rep = check_schema(bad, symbolic_ring(Regime::ring), 3);
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.failures(), 1u);
  EXPECT_NE(rep.instances[0].detail.find("a*b vs a+b"), std::string::npos);
}

TEST(RulesTest, ParallelMatchesSequential) {
  Ring ring = symbolic_ring(Regime::semiring);
  auto a = check_catalog(Regime::semiring, ring, 2, false);
  auto b = check_catalog(Regime::semiring, ring, 2, true);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].instances.size(), b[i].instances.size());
  }
}

TEST(RulesTest, ArityBoundFromEnvironment) {
  setenv("ZXALG_ARITY_BOUND", "2", 1);
  EXPECT_EQ(default_arity_bound(), 2);
  setenv("ZXALG_ARITY_BOUND", "junk", 1);
  EXPECT_EQ(default_arity_bound(), 3);
  unsetenv("ZXALG_ARITY_BOUND");
  EXPECT_EQ(default_arity_bound(), 3);
}

TEST(LemmasTest, SuitesPass) {
  for (Regime regime : {Regime::ring, Regime::semiring}) {
    auto reports = run_lemma_suite(regime, symbolic_ring(regime));
    EXPECT_GE(reports.size(), 25u);
    for (const SoundnessReport& rep : reports) EXPECT_TRUE(rep.passed()) << rep.name;
  }
  EXPECT_THROW(run_lemma_suite(Regime::ring, Ring::naturals()), RegimeError);
}

TEST(LemmasTest, MandatoryFixturesPresent) {
  std::set<std::string> have;
  for (const LemmaFixture& f : lemma_fixtures()) have.insert(f.schema.name);
  for (const char* n : {"gdothred", "gpidotredpi", "b3ring", "gpidotcopy", "gpihrpi", "Pic", "Dis", "raddcomplex",
                        "multiplypimulticommutg", "pimultiplyabsorbtion", "pitopaddpipaircommutprop",
                        "multiplypimulticommute", "redspidertonormalfm1", "redspidertonormalfm2",
                        "redspidertonormalfm3", "redspidertonormalfm4", "AD'", "AD''", "tr5prime", "trianglecopylr",
                        "andgate2v", "andcopy", "pitrinand", "andpieliminate", "ruletensorLsim", "ruletensorL",
                        "hopfvariant2", "Hopf", "Zero'", "Bas1'", "Ivt", "BiA"})
    EXPECT_TRUE(have.count(n)) << n;
}

TEST(LemmasTest, AdditionNode) {
  Ring z = Ring::integers();
  EXPECT_EQ(format_matrix(z, evaluate(addition_node(z), z)), "2 4\n1 0 0 0\n0 1 1 0\n");
  Ring nat = Ring::naturals();
  EXPECT_NO_THROW(validate(addition_node(nat), nat));
}

}  // namespace
}  // namespace zxalg
