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

#include "sinkeval/metagame.h"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "sinkeval/io.h"
#include "sinkeval/oracle.h"
#include "test_util.h"

namespace sinkeval {
namespace {

using testing::CodeOf;
using testing::DataPath;

constexpr double kEmbeddingTolerance = 1e-9;
constexpr double kTruncationTolerance = 1e-8;
constexpr int kTruncationTerms = 100;

StochasticGame Load(const std::string& name) {
  return ParseStochasticGameJson(ReadInput(DataPath(name)));
}

// One state, every transition back to it, rewards from a symmetric matrix.
StochasticGame Embed(const std::vector<std::vector<double>>& m, double beta) {
  const std::size_t n = m.size();
  StochasticGame sg;
  sg.states = {"x"};
  for (std::size_t a = 0; a < n; ++a) sg.actions.push_back("a" + std::to_string(a));
  sg.initial_dist = {1.0};
  sg.discount1 = sg.discount2 = beta;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      sg.transitions.push_back({1.0});
      sg.reward1.push_back(m[a][b]);
      sg.reward2.push_back(m[b][a]);
    }
  }
  return sg;
}

StochasticGame SizedGame(std::size_t states, std::size_t actions) {
  StochasticGame sg;
  for (std::size_t x = 0; x < states; ++x) sg.states.push_back("x" + std::to_string(x));
  for (std::size_t a = 0; a < actions; ++a) sg.actions.push_back("a" + std::to_string(a));
  sg.initial_dist.assign(states, 1.0 / states);
  const std::size_t triples = states * actions * actions;
  sg.transitions.assign(triples, std::vector<double>(states, 0.0));
  for (auto& row : sg.transitions) row[0] = 1.0;
  sg.reward1.assign(triples, 0.0);
  sg.reward2.assign(triples, 0.0);
  return sg;
}

// Expected truncated discounted sum by propagating the state distribution.
double TruncatedValue(const StochasticGame& sg, const DeterministicStrategy& s1,
                      const DeterministicStrategy& s2,
                      const std::vector<double>& reward, double beta) {
  const std::size_t m = sg.num_states();
  std::vector<double> dist = sg.initial_dist;
  double total = 0.0;
  double weight = 1.0;
  for (int t = 0; t < kTruncationTerms; ++t) {
    std::vector<double> next(m, 0.0);
    for (std::size_t x = 0; x < m; ++x) {
      const std::size_t k = sg.TripleIndex(x, s1[x], s2[x]);
      total += weight * dist[x] * reward[k];
      for (std::size_t y = 0; y < m; ++y) next[y] += dist[x] * sg.transitions[k][y];
    }
    dist = std::move(next);
    weight *= beta;
  }
  return total;
}

TEST(MetagameTest, EnumerationCounts) {
  EXPECT_EQ(EnumerateStrategies(SizedGame(2, 2)).size(), 4u);
  const auto one_state = EnumerateStrategies(SizedGame(1, 3));
  EXPECT_EQ(one_state, (std::vector<DeterministicStrategy>{{0}, {1}, {2}}));
  EXPECT_EQ(EnumerateStrategies(SizedGame(4, 4)).size(), 256u);
  EXPECT_EQ(CodeOf([] { EnumerateStrategies(SizedGame(7, 4)); }),
            ErrorCode::kExplosionCap);
  const auto order = EnumerateStrategies(SizedGame(2, 2));
  EXPECT_EQ(order, (std::vector<DeterministicStrategy>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(MetagameTest, GeometricSeries) {
  StochasticGame sg = Embed({{1, 1}, {1, 1}}, 0.5);
  EXPECT_NEAR(EvaluateJoint(sg, {0}, {1}).first, 2.0, kEmbeddingTolerance);
  sg = Embed({{0, 0}, {0, 0}}, 0.5);
  EXPECT_EQ(EvaluateJoint(sg, {1}, {0}).first, 0.0);
  EXPECT_EQ(CodeOf([&] { EvaluateJoint(sg, {2}, {0}); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([&] { EvaluateJoint(sg, {0, 0}, {0}); }),
            ErrorCode::kInvalidArgument);
}

TEST(MetagameTest, StatelessEmbeddingRecoversScaledMatrix) {
  const std::vector<std::vector<double>> m = {{2, 1, 1}, {2, 1, 2}, {1, 0, 2}};
  for (double beta : {0.5, 0.9, 0.1}) {
    const SymmetricGame game = BuildMetaGame(Embed(m, beta));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(game.RowPayoff(i, j), m[i][j] / (1.0 - beta),
                    kEmbeddingTolerance);
      }
    }
  }
  const SymmetricGame from_file = BuildMetaGame(Load("embedding.json"));
  EXPECT_EQ(from_file.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_NEAR(from_file.RowPayoff(1, 2), 4.0, kEmbeddingTolerance);
}

TEST(MetagameTest, MatchesTruncatedSum) {
  for (const char* name : {"chain.json"}) {
    const StochasticGame sg = Load(name);
    const auto strategies = EnumerateStrategies(sg);
    for (const auto& s1 : strategies) {
      for (const auto& s2 : strategies) {
        const auto [j1, j2] = EvaluateJoint(sg, s1, s2);
        EXPECT_NEAR(j1, TruncatedValue(sg, s1, s2, sg.reward1, sg.discount1),
                    kTruncationTolerance);
        EXPECT_NEAR(j2, TruncatedValue(sg, s1, s2, sg.reward2, sg.discount2),
                    kTruncationTolerance);
      }
    }
  }
}

TEST(MetagameTest, RejectsAsymmetricGame) {
  EXPECT_EQ(CodeOf([] { BuildMetaGame(Load("asymmetric.json")); }),
            ErrorCode::kAsymmetryDetected);
  StochasticGame sg = Load("two_state.json");
  sg.reward2[3] += 0.25;
  EXPECT_EQ(CodeOf([&] { BuildMetaGame(sg); }), ErrorCode::kAsymmetryDetected);
}

TEST(MetagameTest, ValidationErrors) {
  const StochasticGame good = Embed({{1, 0}, {0, 1}}, 0.5);
  EXPECT_NO_THROW(good.Validate());
  auto expect_invalid = [](StochasticGame sg) {
    EXPECT_EQ(CodeOf([&] { sg.Validate(); }), ErrorCode::kInvalidStochasticGame);
  };
  StochasticGame sg = good;
  sg.discount1 = 1.0;
  expect_invalid(sg);
  sg = good;
  sg.discount2 = 0.0;
  expect_invalid(sg);
  sg = good;
  sg.initial_dist = {0.5};
  expect_invalid(sg);
  sg = good;
  sg.transitions[1] = {-0.5};
  expect_invalid(sg);
  sg = good;
  sg.reward1.pop_back();
  expect_invalid(sg);
  sg = good;
  sg.actions = {"a", "a"};
  expect_invalid(sg);
  sg = good;
  sg.reward2[0] = std::nan("");
  expect_invalid(sg);
  EXPECT_EQ(CodeOf([&] { BuildMetaGame(sg); }), ErrorCode::kInvalidStochasticGame);
}

TEST(MetagameTest, TwoStateFixtureIsValidGame) {
  const SymmetricGame game = BuildMetaGame(Load("two_state.json"));
  EXPECT_EQ(game.num_strategies(), 4u);
  EXPECT_EQ(game.labels(), (std::vector<std::string>{"c-c", "c-d", "d-c", "d-d"}));
}

TEST(MetagameProperty, StateRelabelingInvariance) {
  for (const char* name : {"two_state.json", "chain.json"}) {
    const StochasticGame sg = Load(name);
    // Reverse the order of the two states.
    StochasticGame swapped = sg;
    std::reverse(swapped.states.begin(), swapped.states.end());
    std::reverse(swapped.initial_dist.begin(), swapped.initial_dist.end());
    const std::size_t k = sg.num_actions();
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          const std::size_t from = sg.TripleIndex(x, a, b);
          const std::size_t to = swapped.TripleIndex(1 - x, a, b);
          swapped.transitions[to] = {sg.transitions[from][1], sg.transitions[from][0]};
          swapped.reward1[to] = sg.reward1[from];
          swapped.reward2[to] = sg.reward2[from];
        }
      }
    }
    const SymmetricGame original = BuildMetaGame(sg);
    const SymmetricGame relabeled = BuildMetaGame(swapped);
    // Strategy (a, b) becomes (b, a) once the states swap places.
    auto map = [k](std::size_t i) { return (i % k) * k + i / k; };
    for (std::size_t i = 0; i < original.num_strategies(); ++i) {
      for (std::size_t j = 0; j < original.num_strategies(); ++j) {
        EXPECT_NEAR(original.RowPayoff(i, j), relabeled.RowPayoff(map(i), map(j)),
                    kEmbeddingTolerance);
      }
    }
  }
}

TEST(MetagameProperty, EmbeddingOfRandomGames) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SymmetricGame game = RandomGame(2 + seed % 5, -9, 9, GameFilter{}, seed);
    const SymmetricGame meta = BuildMetaGame(Embed(game.PayoffRows(), 0.75));
    for (std::size_t i = 0; i < game.num_strategies(); ++i) {
      for (std::size_t j = 0; j < game.num_strategies(); ++j) {
        EXPECT_NEAR(meta.RowPayoff(i, j), 4.0 * game.RowPayoff(i, j),
                    kEmbeddingTolerance);
      }
    }
  }
}

}  // namespace
}  // namespace sinkeval
