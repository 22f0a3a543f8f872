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

#include <algorithm>

#include "zxalg/error.hpp"
#include "zxalg/gadgets.hpp"
#include "zxalg/normalform.hpp"
#include "zxalg/rules.hpp"

namespace zxalg {
namespace {

using Pair = std::pair<Diagram, Diagram>;

Element ph(const Bindings& b, const std::string& name) { return b.phases.at(name); }

IntParam ar(std::string name, int min = 0) { return IntParam{std::move(name), min, 0, true}; }
IntParam range(std::string name, int lo, int hi) { return IntParam{std::move(name), lo, hi, false}; }

Diagram scalar_two() { return seq(cap(), cup()); }
Diagram one_state() { return seq(red(0, 1), red_pi()); }

// Vector of the red spider 0 -> m: 1 on even parity, 0 elsewhere.
std::vector<Element> parity_vector(const Ring& r, int m) {
  std::vector<Element> v;
  for (unsigned x = 0; x < (1u << m); ++x) v.push_back(__builtin_popcount(x) % 2 == 0 ? r.one() : r.zero());
  return v;
}

std::vector<Element> kron_vector(const Ring& r, const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> out;
  for (const Element& x : a)
    for (const Element& y : b) out.push_back(r.mul(x, y));
  return out;
}

ExponentSet mask_set(int mask) {
  ExponentSet s;
  for (int k = 0; k < 2; ++k)
    if (mask & (1 << k)) s.push_back(k);
  return s;
}

std::vector<LemmaFixture> build_fixtures() {
  std::vector<LemmaFixture> out;
  const Diagram id = identity();
  auto add = [&out](std::string name, std::vector<IntParam> ints, std::vector<std::string> phases,
                    FixtureScope scope, std::string source, SchemaBuilder build) {
    out.push_back(LemmaFixture{Schema{std::move(name), std::move(ints), std::move(phases), std::move(build)}, scope,
                               std::move(source)});
  };
  const FixtureScope R = FixtureScope::ring, S = FixtureScope::semiring, B = FixtureScope::both;

  // Derived equalities for rings.
  add("gdothred", {}, {}, R, "rings", [](const Ring& r, const Bindings&) {
    return Pair{seq(green(0, 1, r.one()), hadamard()), par(red(0, 1), scalar_two())};
  });
  add("gpidotredpi", {}, {}, R, "rings", [](const Ring& r, const Bindings&) {
    return Pair{seq(green(0, 1, r.from_int(-1)), hadamard()), par(one_state(), scalar_two())};
  });
  add("b3ring", {}, {}, R, "rings", [](const Ring& r, const Bindings&) {
    Diagram z = green(1, 1, r.from_int(-1));
    return Pair{seq(z, red(1, 2)), seq(red(1, 2), par(z, z))};
  });
  add("gpidotcopy", {ar("m")}, {}, R, "rings", [](const Ring& r, const Bindings& b) {
    int m = b.integers.at("m");
    Diagram z = green(0, 1, r.from_int(-1));
    return Pair{seq(z, red(1, m)), power(z, m)};
  });
  add("gpihrpi", {}, {}, R, "rings", [](const Ring& r, const Bindings&) {
    return Pair{compose({hadamard(), green(1, 1, r.from_int(-1)), hadamard()}), par(red_pi(), scalar_two())};
  });
  add("Bas1'", {}, {}, R, "rings", [](const Ring& r, const Bindings&) {
    return Pair{seq(green(0, 1, r.one()), triangle_inv()), one_state()};
  });
  add("Ivt", {}, {}, R, "rings", [](const Ring& r, const Bindings&) {
    Diagram z = green(1, 1, r.from_int(-1));
    return Pair{triangle_inv(), compose({z, triangle(), z})};
  });

  // Derived equalities that hold in both regimes.
  add("Hopf", {}, {}, B, "rings", [](const Ring& r, const Bindings&) {
    return Pair{seq(green(1, 2, r.one()), red(2, 1)), seq(green(1, 0, r.one()), red(0, 1))};
  });
  add("Hopf'", {}, {}, B, "rings", [](const Ring& r, const Bindings&) {
    return Pair{seq(red(1, 2), green(2, 1, r.one())), seq(red(1, 0), green(0, 1, r.one()))};
  });
  add("Pic", {ar("m")}, {}, B, "rings", [](const Ring& r, const Bindings& b) {
    int m = b.integers.at("m");
    return Pair{seq(one_state(), green(1, m, r.one())), power(one_state(), m)};
  });
  add("Zero'", {}, {}, B, "rings", [](const Ring& r, const Bindings&) {
    return Pair{green(0, 1, r.zero()), red(0, 1)};
  });
  add("capgreen", {}, {}, B, "rings", [](const Ring& r, const Bindings&) {
    return Pair{cap(), green(0, 2, r.one())};
  });
  add("tr5prime", {}, {}, B, "rings", [](const Ring&, const Bindings&) {
    return Pair{compose({red_pi(), triangle(), red_pi()}), flip(triangle())};
  });
  add("trianglecopylr", {}, {}, B, "rings", [id](const Ring& r, const Bindings&) {
    Diagram split = green(1, 2, r.one());
    return Pair{seq(split, par(triangle(), id)), compose({split, par(id, triangle()), swap_wires()})};
  });
  add("BiA", {}, {}, B, "rings", [id](const Ring& r, const Bindings&) {
    Diagram merge = green(2, 1, r.one());
    return Pair{seq(merge, red(1, 2)),
                compose({par(red(1, 2), red(1, 2)), tensor({id, swap_wires(), id}), par(merge, merge)})};
  });
  add("Dis", {}, {}, B, "rings", [id](const Ring& r, const Bindings&) {
    return Pair{seq(par(id, red(2, 1)), and_gate()),
                compose({tensor({green(1, 2, r.one()), id, id}), tensor({id, swap_wires(), id}),
                         par(and_gate(), and_gate()), red(2, 1)})};
  });
  add("raddcomplex", {range("mask", 1, 3)}, {"a", "b"}, B, "rings", [](const Ring& r, const Bindings& b) {
    ExponentSet s = mask_set(b.integers.at("mask"));
    Element x = ph(b, "a"), y = ph(b, "b");
    return Pair{seq(row_add_gadget(r, 2, s, x), row_add_gadget(r, 2, s, y)), row_add_gadget(r, 2, s, r.add(x, y))};
  });
  add("multiplypimulticommutg", {}, {"a", "b"}, B, "rings", [id](const Ring& r, const Bindings& b) {
    Diagram flip0 = par(red_pi(), id);
    Diagram ma = row_mult_gadget(r, 2, ph(b, "a")), mb = row_mult_gadget(r, 2, ph(b, "b"));
    return Pair{compose({ma, flip0, mb, flip0}), compose({flip0, mb, flip0, ma})};
  });
  add("multiplypimulticommute", {}, {"a", "b"}, B, "rings", [](const Ring& r, const Bindings& b) {
    Diagram flip_all = par(red_pi(), red_pi());
    Diagram conj = compose({flip_all, row_mult_gadget(r, 2, ph(b, "a")), flip_all});
    Diagram mb = row_mult_gadget(r, 2, ph(b, "b"));
    return Pair{seq(conj, mb), seq(mb, conj)};
  });
  add("pimultiplyabsorbtion", {}, {"a"}, B, "rings", [id](const Ring&, const Bindings& b) {
    Diagram z = green(1, 1, ph(b, "a"));
    return Pair{compose({red_pi(), z, red_pi(), z}), par(id, scalar_form(ph(b, "a")))};
  });
  add("pitopaddpipaircommutprop", {}, {"a", "b"}, B, "rings", [id](const Ring& r, const Bindings& b) {
    Diagram flip0 = par(red_pi(), id);
    Diagram x = compose({flip0, row_add_gadget(r, 2, {0}, ph(b, "a")), flip0});
    Diagram y = row_add_gadget(r, 2, {0}, ph(b, "b"));
    return Pair{seq(x, y), seq(y, x)};
  });
  for (int m = 1; m <= 3; ++m)
    add("redspidertonormalfm" + std::to_string(m), {}, {}, B, "rings", [m](const Ring& r, const Bindings&) {
      return Pair{red(0, m), synthesize_state(r, parity_vector(r, m))};
    });
  add("redspidertonormalfm4", {}, {}, B, "rings", [](const Ring& r, const Bindings&) {
    return Pair{one_state(), synthesize_state(r, {r.zero(), r.one()})};
  });
  add("AD'", {}, {"a", "b"}, B, "rings", [](const Ring& r, const Bindings& b) {
    Diagram w = addition_node(r);
    Element x = ph(b, "a"), y = ph(b, "b");
    return Pair{compose({flip(w), par(green(1, 1, x), green(1, 1, y)), w}), green(1, 1, r.add(x, y))};
  });
  add("ruletensorLsim", {}, {"a0", "a1", "b0", "b1"}, B, "rings", [](const Ring& r, const Bindings& b) {
    std::vector<Element> v{ph(b, "a0"), ph(b, "a1")}, w{ph(b, "b0"), ph(b, "b1")};
    return Pair{par(synthesize_state(r, v), synthesize_state(r, w)), synthesize_state(r, kron_vector(r, v, w))};
  });
  add("ruletensorL", {}, {"a0", "a1", "b0", "b1", "b2", "b3"}, B, "rings", [](const Ring& r, const Bindings& b) {
    std::vector<Element> v{ph(b, "a0"), ph(b, "a1")};
    std::vector<Element> w{ph(b, "b0"), ph(b, "b1"), ph(b, "b2"), ph(b, "b3")};
    return Pair{par(synthesize_state(r, v), synthesize_state(r, w)), synthesize_state(r, kron_vector(r, v, w))};
  });
  add("hopfvariant2", {}, {}, B, "semirings", [id](const Ring& r, const Bindings&) {
    return Pair{compose({green(1, 2, r.one()), par(id, triangle()), red(2, 1)}), triangle()};
  });

  // Derived equalities for semirings.
  add("AD''", {}, {"a", "b"}, S, "semirings", [](const Ring& r, const Bindings& b) {
    Element x = ph(b, "a"), y = ph(b, "b");
    return Pair{seq(flip(addition_node(r)), par(green(1, 0, x), green(1, 0, y))), green(1, 0, r.add(x, y))};
  });
  add("andgate2v", {}, {}, S, "semirings", [id](const Ring& r, const Bindings&) {
    return Pair{seq(green(1, 2, r.one()), and_gate()), id};
  });
  add("andcopy", {}, {}, S, "semirings", [id](const Ring& r, const Bindings&) {
    Diagram split = green(1, 2, r.one());
    return Pair{seq(and_gate(), split),
                compose({par(split, split), tensor({id, swap_wires(), id}), par(and_gate(), and_gate())})};
  });
  add("pitrinand", {}, {}, S, "semirings", [id](const Ring&, const Bindings&) {
    return Pair{seq(par(id, one_state()), and_gate()), id};
  });
  add("andpieliminate", {}, {}, S, "semirings", [id](const Ring& r, const Bindings&) {
    return Pair{seq(par(id, red(0, 1)), and_gate()), seq(green(1, 0, r.one()), red(0, 1))};
  });
  return out;
}

}  // namespace

const std::vector<LemmaFixture>& lemma_fixtures() {
  static const std::vector<LemmaFixture> fixtures = build_fixtures();
  return fixtures;
}

std::vector<SoundnessReport> run_lemma_suite(Regime regime, const Ring& ring, int arity_bound) {
  if (ring.regime() == Regime::semiring && regime == Regime::ring)
    throw RegimeError("the ring lemma suite needs a ring, got " + ring.name());
  std::vector<SoundnessReport> out;
  for (const LemmaFixture& f : lemma_fixtures()) {
    bool applies = f.scope == FixtureScope::both || (f.scope == FixtureScope::ring) == (regime == Regime::ring);
    if (applies) out.push_back(check_schema(f.schema, ring, arity_bound));
  }
  return out;
}

}  // namespace zxalg
