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

#include "zxalg/render.hpp"

#include <gtest/gtest.h>


namespace zxalg {
namespace {

const Ring kZ = Ring::integers();

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(RenderTest, SingleTriangle) {
  std::string dot = render_dot(triangle(), kZ);
  EXPECT_NE(dot.find("rankdir=TB"), std::string::npos);
  EXPECT_EQ(count(dot, "shape=triangle"), 1u);
  EXPECT_NE(dot.find("in0 -> n0;"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> out0;"), std::string::npos);
  EXPECT_EQ(count(dot, " -> "), 2u);
}

TEST(RenderTest, EmptyDiagramIsEmptyGraph) {
  std::string dot = render_dot(Diagram(), kZ);
  EXPECT_EQ(count(dot, " -> "), 0u);
  EXPECT_EQ(count(dot, "shape="), 0u);
}

TEST(RenderTest, IdentitiesAreWires) {
  std::string dot = render_dot(par(identity(), triangle()), kZ);
  EXPECT_NE(dot.find("in0 -> out0;"), std::string::npos);
}

TEST(RenderTest, KindsHaveDistinctStyles) {
  std::string dot = render_dot(compose({green(1, 1, kZ.from_int(3)), hadamard(), red(1, 1)}), kZ);
  EXPECT_NE(dot.find("#ccffcc"), std::string::npos);
  EXPECT_NE(dot.find("label=\"3\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"H\""), std::string::npos);
  EXPECT_NE(dot.find("#ff8888"), std::string::npos);
}

TEST(RenderTest, StableIds) {
  Diagram d = seq(green(1, 2, kZ.one()), par(triangle(), red_pi()));
  EXPECT_EQ(render_dot(d, kZ), render_dot(d, kZ));
}

TEST(RenderTest, NormalFormClusters) {
  NormalForm nf = normal_form(kZ, {kZ.from_int(4), kZ.from_int(5)});
  std::string dot = render_dot(nf, kZ);
  EXPECT_EQ(count(dot, "subgraph cluster_"), 3u);
  EXPECT_NE(dot.find("label=\"base\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"add[0]\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"mult\""), std::string::npos);
  RenderOptions flat;
  flat.cluster_parts = false;
  EXPECT_EQ(count(render_dot(nf, kZ, flat), "subgraph"), 0u);
}

}  // namespace
}  // namespace zxalg
