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

#include "sinkeval/metrics.h"

#include "gtest/gtest.h"
#include "sinkeval/oracle.h"
#include "test_util.h"

namespace sinkeval {
namespace {

using testing::LoadFixture;
using testing::S;

bool IsSubset(const StrategySet& a, const StrategySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(MetricsTest, BestDominating) {
  EXPECT_EQ(EvaluateBestDominating(LoadFixture("two_cycles.json")).preferred,
            S({1, 2, 3, 6, 7, 8}));
  EXPECT_EQ(EvaluateBestDominating(LoadFixture("mutual_pair.json")).preferred, S({1, 2}));
  const EvaluationReport single =
      EvaluateBestDominating(SymmetricGame::Create(1, {{0}}));
  EXPECT_EQ(single.preferred, S({1}));
  EXPECT_EQ(single.metric_values, std::vector<double>{1.0});
  EXPECT_EQ(MetricKindName(MetricKind::kBestDominating), "bd");
}

TEST(MetricsTest, NonDominated) {
  EXPECT_EQ(EvaluateNonDominated(LoadFixture("dominated.json")).preferred, S({1, 2}));
  EXPECT_EQ(EvaluateNonDominated(LoadFixture("two_cycles.json")).preferred,
            S({1, 2, 3, 4, 6, 7, 8}));
  EXPECT_EQ(EvaluateNonDominated(SymmetricGame::Create(1, {{0}})).preferred,
            S({1}));
  EXPECT_EQ(MetricKindName(MetricKind::kNonDominated), "nd");
  EXPECT_EQ(Evaluate(LoadFixture("dominated.json"), MetricKind::kNonDominated).preferred,
            S({1, 2}));
}

TEST(MetricsTest, MetricValuesAreIndicators) {
  const EvaluationReport report = EvaluateBestDominating(LoadFixture("two_cycles.json"));
  EXPECT_EQ(report.metric_values,
            (std::vector<double>{1, 1, 1, 0, 0, 1, 1, 1, 0}));
  EXPECT_TRUE(report.SatisfiesMetricProperty());
}

TEST(MetricsTest, JointPreferred) {
  EXPECT_EQ(JointPreferredStrategies(LoadFixture("mutual_pair.json"), Variant::kStrict),
            S({1, 2, 3}));
  EXPECT_EQ(JointPreferredStrategies(LoadFixture("self_response.json"), Variant::kStrict),
            S({1}));
  EXPECT_EQ(JointPreferredStrategies(LoadFixture("dominated.json"), Variant::kWeak),
            S({1}));
  const SymmetricGame two_cycles = LoadFixture("two_cycles.json");
  EXPECT_EQ(JointPreferredStrategies(two_cycles, Variant::kStrict), S({1, 2, 3, 6, 7, 8}));
  EXPECT_EQ(JointPreferredStrategies(two_cycles, Variant::kWeak),
            S({1, 2, 3, 4, 6, 7, 8}));
}

TEST(MetricsTest, StrategiesInJointSinksUsesBothCoordinates) {
  SinkEquilibriumSet sinks;
  sinks.components = {{JointIndex(3, {0, 2})}};
  EXPECT_EQ(StrategiesInJointSinks(3, sinks), S({1, 3}));
}

TEST(MetricsProperty, PreferredSetRelations) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const SymmetricGame game = RandomGame(2 + seed % 6, 0, 9, GameFilter{}, seed);
    const EvaluationReport bd = EvaluateBestDominating(game);
    const EvaluationReport nd = EvaluateNonDominated(game);
    EXPECT_TRUE(bd.SatisfiesMetricProperty());
    EXPECT_TRUE(nd.SatisfiesMetricProperty());
    EXPECT_TRUE(IsSubset(bd.preferred, nd.preferred));
    const StrategySet weak = JointPreferredStrategies(game, Variant::kWeak);
    EXPECT_TRUE(IsSubset(weak, nd.preferred));
    if (nd.preferred.size() == 1) EXPECT_EQ(weak, nd.preferred);
  }
}

}  // namespace
}  // namespace sinkeval
