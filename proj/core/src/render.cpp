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

#include <sstream>
#include <vector>

namespace zxalg {
namespace {

struct Port {
  std::string node;
  int index = 0;
};

struct Graph {
  struct Node {
    std::string id;
    std::string attrs;
    int cluster = -1;
  };
  std::vector<Node> nodes;
  std::vector<std::string> edges;
  int cluster = -1;

  std::string add(const std::string& attrs) {
    std::string id = "n" + std::to_string(nodes.size());
    nodes.push_back({id, attrs, cluster});
    return id;
  }
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node_attrs(const Generator& g, const Ring& ring) {
  auto spider = [&](const std::string& color, const std::string& label) {
    return "shape=circle, style=filled, fillcolor=" + color + ", label=" + quote(label);
  };
  switch (g.kind) {
    case GeneratorKind::green: {
      std::string label = ring.is_one(*g.phase) ? "" : ring.format(*g.phase);
      return spider("\"#ccffcc\"", label);
    }
    case GeneratorKind::red: return spider("\"#ff8888\"", "");
    case GeneratorKind::red_pi: return spider("\"#ff8888\"", "pi");
    case GeneratorKind::hadamard: return "shape=square, style=filled, fillcolor=\"#ffff66\", label=\"H\"";
    case GeneratorKind::triangle: return "shape=triangle, label=\"\"";
    case GeneratorKind::triangle_inv: return "shape=invtriangle, label=\"-1\"";
    case GeneratorKind::swap: return "shape=point, xlabel=\"swap\"";
    case GeneratorKind::cap: return "shape=point, xlabel=\"cap\"";
    case GeneratorKind::cup: return "shape=point, xlabel=\"cup\"";
    case GeneratorKind::and_gate: return "shape=box, label=\"AND\"";
    case GeneratorKind::xor_gate: return spider("\"#ff8888\"", "");
    case GeneratorKind::not_gate: return spider("\"#ff8888\"", "pi");
    case GeneratorKind::copy: return spider("\"#ccffcc\"", "");
    case GeneratorKind::gbox:
      return "shape=box, style=filled, fillcolor=\"#ccffcc\", label=" + quote(ring.format(*g.phase));
    case GeneratorKind::identity: break;
  }
  return "label=\"\"";
}

std::vector<Port> build(const Diagram& d, const Ring& ring, std::vector<Port> inputs, Graph& graph) {
  switch (d.shape()) {
    case Diagram::Shape::seq: return build(d.rhs(), ring, build(d.lhs(), ring, std::move(inputs), graph), graph);
    case Diagram::Shape::par: {
      auto split = inputs.begin() + d.lhs().inputs();
      std::vector<Port> out = build(d.lhs(), ring, std::vector<Port>(inputs.begin(), split), graph);
      std::vector<Port> right = build(d.rhs(), ring, std::vector<Port>(split, inputs.end()), graph);
      out.insert(out.end(), right.begin(), right.end());
      return out;
    }
    case Diagram::Shape::generator: break;
  }
  const Generator& g = d.generator();
  if (g.kind == GeneratorKind::identity) return inputs;
  std::string id = graph.add(node_attrs(g, ring));
  for (std::size_t i = 0; i < inputs.size(); ++i) graph.edges.push_back(inputs[i].node + " -> " + id);
  std::vector<Port> out;
  for (int i = 0; i < g.outputs; ++i) out.push_back({id, i});
  return out;
}

std::string emit(Graph& graph, const Diagram& d, const std::vector<std::string>& cluster_labels,
                 const std::vector<Port>& outputs, const RenderOptions& options) {
  std::ostringstream os;
  os << "digraph " << quote(options.graph_name) << " {\n";
  os << "  rankdir=TB;\n  node [fontsize=10];\n  edge [arrowhead=none];\n";
  for (int i = 0; i < d.inputs(); ++i)
    os << "  in" << i << " [shape=plaintext, label=\"in " << i << "\"];\n";
  for (std::size_t i = 0; i < outputs.size(); ++i)
    os << "  out" << i << " [shape=plaintext, label=\"out " << i << "\"];\n";
  for (const auto& node : graph.nodes)
    if (node.cluster < 0) os << "  " << node.id << " [" << node.attrs << "];\n";
  for (std::size_t c = 0; c < cluster_labels.size(); ++c) {
    os << "  subgraph cluster_" << c << " {\n    label=" << quote(cluster_labels[c]) << ";\n    style=dashed;\n";
    for (const auto& node : graph.nodes)
      if (node.cluster == static_cast<int>(c)) os << "    " << node.id << " [" << node.attrs << "];\n";
    os << "  }\n";
  }
  for (const std::string& e : graph.edges) os << "  " << e << ";\n";
  for (std::size_t i = 0; i < outputs.size(); ++i) os << "  " << outputs[i].node << " -> out" << i << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<Port> boundary(int n) {
  std::vector<Port> ports;
  for (int i = 0; i < n; ++i) ports.push_back({"in" + std::to_string(i), 0});
  return ports;
}

}  // namespace

std::string render_dot(const Diagram& d, const Ring& ring, const RenderOptions& options) {
  Graph graph;
  std::vector<Port> outputs = build(d, ring, boundary(d.inputs()), graph);
  return emit(graph, d, {}, outputs, options);
}

std::string render_dot(const NormalForm& form, const Ring& ring, const RenderOptions& options) {
  if (!options.cluster_parts || form.parts.empty()) return render_dot(form.diagram, ring, options);
  Graph graph;
  std::vector<std::string> labels;
  std::vector<Port> wires;
  for (const auto& [label, part] : form.parts) {
    graph.cluster = static_cast<int>(labels.size());
    labels.push_back(label);
    wires = build(part, ring, std::move(wires), graph);
  }
  return emit(graph, form.diagram, labels, wires, options);
}

}  // namespace zxalg
