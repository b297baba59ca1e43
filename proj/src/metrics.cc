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

#include <algorithm>
#include <limits>

namespace sinkeval {
namespace {

EvaluationReport MakeReport(MetricKind kind, const Digraph& graph) {
  EvaluationReport report;
  report.kind = kind;
  report.sink_equilibria = SinkEquilibria(graph);
  report.preferred = report.sink_equilibria.Members();
  report.metric_values.assign(graph.node_count(), 0.0);
  for (StrategyIndex s : report.preferred) report.metric_values[s] = 1.0;
  return report;
}

}  // namespace

std::string_view MetricKindName(MetricKind kind) {
  return kind == MetricKind::kBestDominating ? "bd" : "nd";
}

bool EvaluationReport::SatisfiesMetricProperty() const {
  double min_preferred = std::numeric_limits<double>::infinity();
  double max_other = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < metric_values.size(); ++s) {
    if (std::binary_search(preferred.begin(), preferred.end(), s)) {
      min_preferred = std::min(min_preferred, metric_values[s]);
    } else {
      max_other = std::max(max_other, metric_values[s]);
    }
  }
  return min_preferred > max_other;
}

EvaluationReport EvaluateBestDominating(const SymmetricGame& game) {
  return MakeReport(MetricKind::kBestDominating, BestResponseDigraph(game));
}

EvaluationReport EvaluateNonDominated(const SymmetricGame& game) {
  return MakeReport(MetricKind::kNonDominated, NonDominatedDigraph(game));
}

EvaluationReport Evaluate(const SymmetricGame& game, MetricKind kind) {
  return kind == MetricKind::kBestDominating ? EvaluateBestDominating(game)
                                             : EvaluateNonDominated(game);
}

SinkEquilibriumSet JointSinkEquilibria(const SymmetricGame& game,
                                       Variant variant) {
  return SinkEquilibria(JointResponseDigraph(game, variant));
}

StrategySet StrategiesInJointSinks(std::size_t n,
                                   const SinkEquilibriumSet& joint_sinks) {
  std::vector<bool> seen(n, false);
  for (const auto& component : joint_sinks.components) {
    for (NodeIndex r : component) {
      const JointStrategy joint = JointFromIndex(n, r);
      seen[joint.row] = true;
      seen[joint.col] = true;
    }
  }
  StrategySet result;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) result.push_back(s);
  }
  return result;
}

StrategySet JointPreferredStrategies(const SymmetricGame& game,
                                     Variant variant) {
  return StrategiesInJointSinks(game.num_strategies(),
                                JointSinkEquilibria(game, variant));
}

}  // namespace sinkeval
