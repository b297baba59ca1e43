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

#ifndef SINKEVAL_METRICS_H_
#define SINKEVAL_METRICS_H_

#include <string_view>
#include <vector>

#include "sinkeval/digraph.h"
#include "sinkeval/game.h"
#include "sinkeval/response_graphs.h"

namespace sinkeval {

enum class MetricKind {
  kBestDominating,  // sink equilibria of the best-response digraph
  kNonDominated,    // sink equilibrium of the non-dominated digraph
};

std::string_view MetricKindName(MetricKind kind);

// Strategy evaluation under one metric. `preferred` is the union of the
// sink equilibria; `metric_values[s]` is 1 for preferred strategies and 0
// otherwise, so every preferred strategy scores strictly higher than every
// other one. No order is imposed inside the preferred set.
struct EvaluationReport {
  MetricKind kind = MetricKind::kBestDominating;
  SinkEquilibriumSet sink_equilibria;
  StrategySet preferred;
  std::vector<double> metric_values;

  // True when min over preferred > max over the rest (vacuous if either
  // side is empty).
  bool SatisfiesMetricProperty() const;
};

EvaluationReport EvaluateBestDominating(const SymmetricGame& game);
EvaluationReport EvaluateNonDominated(const SymmetricGame& game);
EvaluationReport Evaluate(const SymmetricGame& game, MetricKind kind);

// Sink equilibria of the joint-strategy digraph of `variant`, as joint node
// indices (i * n + j).
SinkEquilibriumSet JointSinkEquilibria(const SymmetricGame& game,
                                       Variant variant);

// Strategies occurring in either coordinate of any joint strategy inside a
// sink equilibrium of the joint digraph of `variant`.
StrategySet JointPreferredStrategies(const SymmetricGame& game,
                                     Variant variant);

// Strategies occurring in the given joint-node sink equilibria.
StrategySet StrategiesInJointSinks(std::size_t n,
                                   const SinkEquilibriumSet& joint_sinks);

}  // namespace sinkeval

#endif  // SINKEVAL_METRICS_H_
