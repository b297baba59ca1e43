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

#ifndef SINKEVAL_DIGRAPH_H_
#define SINKEVAL_DIGRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sinkeval/int_matrix.h"

namespace sinkeval {

using NodeIndex = std::size_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

// Finite digraph with set semantics on edges; self-loops are allowed.
// Successor lists are kept sorted, so iteration is always in index order.
class Digraph {
 public:
  Digraph() = default;

  // `successors[u]` lists the heads of edges leaving u, in any order and
  // possibly with repeats. Names default to "s1".."sN". Throws
  // kIndexOutOfRange for an endpoint >= node count, kDimensionMismatch when
  // the name list has the wrong length.
  explicit Digraph(std::vector<std::vector<NodeIndex>> successors,
                   std::vector<std::string> node_names = {});

  static Digraph FromEdges(std::size_t node_count,
                           const std::vector<Edge>& edges,
                           std::vector<std::string> node_names = {});

  std::size_t node_count() const { return successors_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::string>& node_names() const { return names_; }

  std::span<const NodeIndex> Successors(NodeIndex u) const {
    return successors_[u];
  }
  bool HasEdge(NodeIndex u, NodeIndex v) const;

  // All edges in lexicographic order.
  std::vector<Edge> Edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<NodeIndex>> successors_;
  std::vector<std::string> names_;
  std::size_t edge_count_ = 0;
};

// Strongly connected components. `components` is in reverse topological
// order of the condensation: every edge runs from a component to itself or
// to an earlier component, so sinks can appear anywhere but never have a
// later successor. Members of each component are sorted.
struct SccDecomposition {
  std::vector<std::vector<NodeIndex>> components;
  std::vector<std::size_t> component_of;  // node -> index into components
};

SccDecomposition DecomposeScc(const Digraph& g);

// Sink strongly connected components of a digraph, i.e. its sink
// equilibria. Each component is sorted and the list is ordered by smallest
// member, so equal sets compare equal.
struct SinkEquilibriumSet {
  std::vector<std::vector<NodeIndex>> components;

  // Union of all components, sorted.
  std::vector<NodeIndex> Members() const;
  bool Contains(NodeIndex node) const;

  friend bool operator==(const SinkEquilibriumSet&,
                         const SinkEquilibriumSet&) = default;
};

SinkEquilibriumSet SinkEquilibria(const Digraph& g);
SinkEquilibriumSet SinkEquilibria(const Digraph& g,
                                  const SccDecomposition& scc);

IntMatrix AdjacencyMatrix(const Digraph& g);

// Inverse of AdjacencyMatrix. Throws kNonSquare or kNonBinaryEntry.
Digraph DigraphFromAdjacency(const IntMatrix& m,
                             std::vector<std::string> node_names = {});

struct DotOptions {
  std::string graph_name = "G";
  bool omit_self_loops = false;
};

// Graphviz DOT text. Nodes and edges are written in index order; nodes of
// `highlight` get a filled style.
std::string ToDot(const Digraph& g,
                  const std::optional<SinkEquilibriumSet>& highlight = {},
                  const DotOptions& options = {});

}  // namespace sinkeval

#endif  // SINKEVAL_DIGRAPH_H_
