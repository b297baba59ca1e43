// Copyright 2026 The Sinkeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sinkeval/digraph.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sinkeval/errors.h"

namespace sinkeval {
namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

std::vector<std::string> DefaultNames(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
  return names;
}

std::string QuoteDot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Digraph::Digraph(std::vector<std::vector<NodeIndex>> successors,
                 std::vector<std::string> node_names)
    : successors_(std::move(successors)), names_(std::move(node_names)) {
  const std::size_t n = successors_.size();
  if (names_.empty()) {
    names_ = DefaultNames(n);
  } else if (names_.size() != n) {
    throw SinkevalError(ErrorCode::kDimensionMismatch,
                        "expected " + std::to_string(n) + " node names, got " +
                            std::to_string(names_.size()));
  }
  for (NodeIndex u = 0; u < n; ++u) {
    auto& succ = successors_[u];
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    if (!succ.empty() && succ.back() >= n) {
      throw SinkevalError(ErrorCode::kIndexOutOfRange,
                          "edge " + std::to_string(u) + "->" +
                              std::to_string(succ.back()) +
                              " leaves a digraph of " + std::to_string(n) +
                              " nodes");
    }
    edge_count_ += succ.size();
  }
}

Digraph Digraph::FromEdges(std::size_t node_count,
                           const std::vector<Edge>& edges,
                           std::vector<std::string> node_names) {
  std::vector<std::vector<NodeIndex>> successors(node_count);
  for (const auto& [u, v] : edges) {
    if (u >= node_count) {
      throw SinkevalError(ErrorCode::kIndexOutOfRange,
                          "edge tail " + std::to_string(u) + " out of range");
    }
    successors[u].push_back(v);
  }
  return Digraph(std::move(successors), std::move(node_names));
}

bool Digraph::HasEdge(NodeIndex u, NodeIndex v) const {
  if (u >= successors_.size()) return false;
  const auto& succ = successors_[u];
  return std::binary_search(succ.begin(), succ.end(), v);
}

std::vector<Edge> Digraph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (NodeIndex u = 0; u < successors_.size(); ++u) {
    for (NodeIndex v : successors_[u]) edges.emplace_back(u, v);
  }
  return edges;
}

// Tarjan's algorithm with an explicit call stack; joint-strategy digraphs
// can have tens of thousands of nodes.
SccDecomposition DecomposeScc(const Digraph& g) {
  const std::size_t n = g.node_count();
  SccDecomposition result;
  result.component_of.assign(n, kUnvisited);

  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeIndex> stack;
  std::size_t next_index = 0;

  struct Frame {
    NodeIndex node;
    std::size_t next_child;
  };
  std::vector<Frame> calls;

  for (NodeIndex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    calls.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!calls.empty()) {
      Frame& frame = calls.back();
      const NodeIndex u = frame.node;
      const auto succ = g.Successors(u);
      if (frame.next_child < succ.size()) {
        const NodeIndex v = succ[frame.next_child++];
        if (index[v] == kUnvisited) {
          index[v] = lowlink[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          calls.push_back({v, 0});
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }

      if (lowlink[u] == index[u]) {
        std::vector<NodeIndex> component;
        NodeIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component_of[w] = result.components.size();
          component.push_back(w);
        } while (w != u);
        std::sort(component.begin(), component.end());
        result.components.push_back(std::move(component));
      }
      calls.pop_back();
      if (!calls.empty()) {
        const NodeIndex parent = calls.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
      }
    }
  }
  return result;
}

std::vector<NodeIndex> SinkEquilibriumSet::Members() const {
  std::vector<NodeIndex> members;
  for (const auto& component : components) {
    members.insert(members.end(), component.begin(), component.end());
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool SinkEquilibriumSet::Contains(NodeIndex node) const {
  for (const auto& component : components) {
    if (std::binary_search(component.begin(), component.end(), node)) {
      return true;
    }
  }
  return false;
}

SinkEquilibriumSet SinkEquilibria(const Digraph& g) {
  return SinkEquilibria(g, DecomposeScc(g));
}

SinkEquilibriumSet SinkEquilibria(const Digraph& g,
                                  const SccDecomposition& scc) {
  std::vector<bool> has_exit(scc.components.size(), false);
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    const std::size_t cu = scc.component_of[u];
    if (has_exit[cu]) continue;
    for (NodeIndex v : g.Successors(u)) {
      if (scc.component_of[v] != cu) {
        has_exit[cu] = true;
        break;
      }
    }
  }
  SinkEquilibriumSet sinks;
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    if (!has_exit[c]) sinks.components.push_back(scc.components[c]);
  }
  std::sort(sinks.components.begin(), sinks.components.end());
  return sinks;
}

IntMatrix AdjacencyMatrix(const Digraph& g) {
  IntMatrix m(g.node_count(), g.node_count());
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v : g.Successors(u)) m(u, v) = 1;
  }
  return m;
}

Digraph DigraphFromAdjacency(const IntMatrix& m,
                             std::vector<std::string> node_names) {
  if (!m.is_square()) {
    throw SinkevalError(ErrorCode::kNonSquare,
                        "adjacency matrix is " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }
  std::vector<std::vector<NodeIndex>> successors(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto v = m(i, j);
      if (v == 1) {
        successors[i].push_back(j);
      } else if (v != 0) {
        throw SinkevalError(ErrorCode::kNonBinaryEntry,
                            "entry (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") = " +
                                std::to_string(v));
      }
    }
  }
  return Digraph(std::move(successors), std::move(node_names));
}

std::string ToDot(const Digraph& g,
                  const std::optional<SinkEquilibriumSet>& highlight,
                  const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << QuoteDot(options.graph_name) << " {\n";
  const auto& names = g.node_names();
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    out << "  " << QuoteDot(names[u]);
    if (highlight.has_value() && highlight->Contains(u)) {
      out << " [style=filled, fillcolor=palegreen]";
    }
    out << ";\n";
  }
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v : g.Successors(u)) {
      if (options.omit_self_loops && u == v) continue;
      out << "  " << QuoteDot(names[u]) << " -> " << QuoteDot(names[v])
          << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sinkeval
