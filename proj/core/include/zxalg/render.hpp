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

// Graphviz rendering of diagrams.

#include <string>

#include "zxalg/diagram.hpp"
#include "zxalg/normalform.hpp"

namespace zxalg {

struct RenderOptions {
  std::string graph_name = "diagram";
  /// Draw each normal-form piece inside its own labelled cluster.
  bool cluster_parts = true;
};

/// DOT source: boundary nodes for inputs and outputs, one node per generator
/// (identities become plain wires), edges for wires, flowing top to bottom.
std::string render_dot(const Diagram& d, const Ring& ring, const RenderOptions& options = {});
std::string render_dot(const NormalForm& form, const Ring& ring, const RenderOptions& options = {});

}  // namespace zxalg
