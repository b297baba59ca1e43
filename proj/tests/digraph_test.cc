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

#include <random>

#include "gtest/gtest.h"
#include "sinkeval/int_matrix.h"
#include "sinkeval/oracle.h"
#include "sinkeval/response_graphs.h"
#include "test_util.h"

namespace sinkeval {
namespace {

using testing::CodeOf;
using testing::S;
using Components = std::vector<std::vector<NodeIndex>>;

// s1 <-> s2, s3 -> s2, self-loops everywhere.
Digraph MutualPairBestResponse() {
  return Digraph::FromEdges(
      3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
}

TEST(IntMatrixTest, BasicsAndErrors) {
  const IntMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(m.Transposed(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(m * IntMatrix::Identity(2), m);
  EXPECT_EQ(m + m - m, m);
  EXPECT_FALSE(m.IsBinary());
  EXPECT_TRUE(IntMatrix::Identity(3).IsBinary());
  EXPECT_TRUE(IntMatrix(2, 3).IsZero());
  EXPECT_EQ(IntMatrix::BasisProjector(3, 1), (IntMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  EXPECT_EQ(m.CountDifferences(IntMatrix{{1, 0}, {3, 0}}), 2u);
  EXPECT_EQ(CodeOf([] { IntMatrix{{1, 2}, {3}}; }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] { m.CountDifferences(IntMatrix(3, 3)); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { IntMatrix::BasisProjector(2, 2); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(DigraphTest, ConstructionNormalisesEdges) {
  const Digraph g({{2, 1, 1}, {}, {0}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 0}}));
  EXPECT_TRUE(g.HasEdge(2, 0));
  EXPECT_FALSE(g.HasEdge(1, 0));
  EXPECT_EQ(g.node_names(), (std::vector<std::string>{"s1", "s2", "s3"}));
  EXPECT_EQ(CodeOf([] { Digraph({{3}, {}, {}}); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([] { Digraph({{}, {}}, {"a"}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(DigraphTest, SccOfFixture) {
  const SccDecomposition scc = DecomposeScc(MutualPairBestResponse());
  EXPECT_EQ(CanonicalPartition(scc.components), (Components{{0, 1}, {2}}));
  EXPECT_EQ(BruteForceScc(MutualPairBestResponse()), (Components{{0, 1}, {2}}));
}

TEST(DigraphTest, SccOfEdgelessGraph) {
  const Digraph g(std::vector<std::vector<NodeIndex>>(3));
  EXPECT_EQ(CanonicalPartition(DecomposeScc(g).components),
            (Components{{0}, {1}, {2}}));
}

TEST(DigraphTest, SccOrderIsReverseTopological) {
  const Digraph chain = Digraph::FromEdges(4, {{0, 1}, {1, 2}, {2, 3}});
  const SccDecomposition scc = DecomposeScc(chain);
  EXPECT_EQ(scc.components, (Components{{3}, {2}, {1}, {0}}));
}

TEST(DigraphTest, SinkEquilibria) {
  EXPECT_EQ(SinkEquilibria(MutualPairBestResponse()).components, (Components{{0, 1}}));
  const Digraph two_cycles = BestResponseDigraph(testing::LoadFixture("two_cycles.json"));
  EXPECT_EQ(SinkEquilibria(two_cycles).components,
            (Components{S({1, 2, 3}), S({6, 7, 8})}));
  EXPECT_EQ(SinkEquilibria(Digraph(std::vector<std::vector<NodeIndex>>(1))).components, (Components{{0}}));
  const SinkEquilibriumSet sinks = SinkEquilibria(two_cycles);
  EXPECT_EQ(sinks.Members(), S({1, 2, 3, 6, 7, 8}));
  EXPECT_TRUE(sinks.Contains(5));
  EXPECT_FALSE(sinks.Contains(3));
}

TEST(DigraphTest, Adjacency) {
  EXPECT_EQ(AdjacencyMatrix(MutualPairBestResponse()),
            (IntMatrix{{1, 1, 0}, {1, 1, 0}, {0, 1, 1}}));
  EXPECT_TRUE(AdjacencyMatrix(Digraph(std::vector<std::vector<NodeIndex>>(3))).IsZero());
  const Digraph single = DigraphFromAdjacency(IntMatrix{{0, 1}, {0, 0}});
  EXPECT_EQ(single.Edges(), (std::vector<Edge>{{0, 1}}));
  const Digraph loops = DigraphFromAdjacency(IntMatrix::Identity(3));
  EXPECT_EQ(loops.Edges(), (std::vector<Edge>{{0, 0}, {1, 1}, {2, 2}}));
  const Digraph two_cycles = BestResponseDigraph(testing::LoadFixture("two_cycles.json"));
  EXPECT_EQ(SinkEquilibria(DigraphFromAdjacency(AdjacencyMatrix(two_cycles))),
            SinkEquilibria(two_cycles));
  EXPECT_EQ(CodeOf([] { DigraphFromAdjacency(IntMatrix(2, 3)); }),
            ErrorCode::kNonSquare);
  EXPECT_EQ(CodeOf([] { DigraphFromAdjacency(IntMatrix{{0, 2}, {0, 0}}); }),
            ErrorCode::kNonBinaryEntry);
}

TEST(DigraphTest, Dot) {
  const Digraph g = Digraph::FromEdges(2, {{0, 1}});
  EXPECT_NE(ToDot(g).find("\"s1\" -> \"s2\";"), std::string::npos);

  const Digraph mutual_pair = MutualPairBestResponse();
  const std::string dot = ToDot(mutual_pair, SinkEquilibria(mutual_pair));
  EXPECT_NE(dot.find("\"s1\" [style=filled"), std::string::npos);
  EXPECT_NE(dot.find("\"s2\" [style=filled"), std::string::npos);
  EXPECT_EQ(dot.find("\"s3\" [style=filled"), std::string::npos);
  EXPECT_EQ(dot, ToDot(mutual_pair, SinkEquilibria(mutual_pair)));

  DotOptions options;
  options.omit_self_loops = true;
  EXPECT_EQ(ToDot(mutual_pair, std::nullopt, options).find("\"s1\" -> \"s1\""),
            std::string::npos);
  EXPECT_NE(ToDot(mutual_pair).find("\"s1\" -> \"s1\""), std::string::npos);
}

TEST(DigraphProperty, SccMatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t nodes = 1 + seed % 12;
    const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    const Digraph g = RandomDigraph(nodes, p, seed);
    const SccDecomposition scc = DecomposeScc(g);
    ASSERT_EQ(CanonicalPartition(scc.components), BruteForceScc(g))
        << "seed " << seed;

    // Blocks cover every node exactly once and agree with component_of.
    std::vector<int> seen(nodes, 0);
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
      for (NodeIndex u : scc.components[c]) {
        ++seen[u];
        EXPECT_EQ(scc.component_of[u], c);
      }
    }
    for (int count : seen) EXPECT_EQ(count, 1);

    // Edges never point to a later component.
    for (const auto& [u, v] : g.Edges()) {
      EXPECT_LE(scc.component_of[v], scc.component_of[u]);
    }

    // Sinks are nonempty and closed under successors.
    const SinkEquilibriumSet sinks = SinkEquilibria(g);
    EXPECT_FALSE(sinks.components.empty());
    for (const auto& block : sinks.components) {
      for (NodeIndex u : block) {
        for (NodeIndex v : g.Successors(u)) {
          EXPECT_TRUE(std::binary_search(block.begin(), block.end(), v));
        }
      }
    }

    EXPECT_EQ(DigraphFromAdjacency(AdjacencyMatrix(g)), g);
  }
}

TEST(DigraphProperty, BruteForceLimits) {
  EXPECT_EQ(BruteForceScc(Digraph::FromEdges(3, {{0, 1}, {1, 2}, {2, 0}})),
            (Components{{0, 1, 2}}));
  EXPECT_EQ(CodeOf([] {
              BruteForceScc(Digraph(std::vector<std::vector<NodeIndex>>(
                  kBruteForceSccLimit + 1)));
            }),
            ErrorCode::kTooLarge);
}

TEST(DigraphProperty, LargeChainDoesNotOverflowStack) {
  const std::size_t n = 200000;
  std::vector<std::vector<NodeIndex>> successors(n);
  for (std::size_t u = 0; u + 1 < n; ++u) successors[u].push_back(u + 1);
  successors[n - 1].push_back(0);
  const SccDecomposition scc = DecomposeScc(Digraph(std::move(successors)));
  EXPECT_EQ(scc.components.size(), 1u);
}

}  // namespace
}  // namespace sinkeval
