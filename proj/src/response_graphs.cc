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

#include "sinkeval/response_graphs.h"

#include <algorithm>
#include <vector>

namespace sinkeval {
namespace {

std::vector<std::string> JointNames(const SymmetricGame& game) {
  const std::size_t n = game.num_strategies();
  std::vector<std::string> names;
  names.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back(FormatJointStrategy(game, {i, j}));
    }
  }
  return names;
}

// Precomputed deviation rule. best_[o] is the best payoff against o.
class DeviationRule {
 public:
  DeviationRule(const SymmetricGame& game, Variant variant)
      : game_(game), variant_(variant), best_(game.num_strategies()) {
    const std::size_t n = game.num_strategies();
    for (std::size_t o = 0; o < n; ++o) {
      double best = game.RowPayoff(0, o);
      for (std::size_t s = 1; s < n; ++s) best = std::max(best, game.RowPayoff(s, o));
      best_[o] = best;
    }
  }

  bool Permits(StrategyIndex current, StrategyIndex candidate,
               StrategyIndex opponent) const {
    const double now = game_.RowPayoff(current, opponent);
    const double next = game_.RowPayoff(candidate, opponent);
    if (variant_ == Variant::kWeak) return game_.AtLeast(next, now);
    return game_.AtLeast(next, best_[opponent]) &&
           game_.StrictlyGreater(next, now);
  }

 private:
  const SymmetricGame& game_;
  Variant variant_;
  std::vector<double> best_;
};

}  // namespace

std::string_view VariantName(Variant variant) {
  return variant == Variant::kStrict ? "strict" : "weak";
}

Digraph BestResponseDigraph(const SymmetricGame& game) {
  const std::size_t n = game.num_strategies();
  std::vector<std::vector<NodeIndex>> successors(n);
  for (std::size_t s = 0; s < n; ++s) successors[s] = game.BestResponses(s);
  return Digraph(std::move(successors), game.labels());
}

Digraph NonDominatedDigraph(const SymmetricGame& game) {
  const std::size_t n = game.num_strategies();
  std::vector<std::vector<NodeIndex>> successors(n);
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      for (std::size_t s = 0; s < n; ++s) {
        if (game.AtLeast(game.RowPayoff(to, s), game.RowPayoff(from, s))) {
          successors[from].push_back(to);
          break;
        }
      }
    }
  }
  return Digraph(std::move(successors), game.labels());
}

Digraph JointResponseDigraph(const SymmetricGame& game, Variant variant) {
  const std::size_t n = game.num_strategies();
  const DeviationRule rule(game, variant);
  std::vector<std::vector<NodeIndex>> successors(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto& out = successors[JointIndex(n, {a, b})];
      // Row player moves a -> x against b.
      for (std::size_t x = 0; x < n; ++x) {
        if (x != a && rule.Permits(a, x, b)) out.push_back(JointIndex(n, {x, b}));
      }
      // Column player moves b -> y against a.
      for (std::size_t y = 0; y < n; ++y) {
        if (y != b && rule.Permits(b, y, a)) out.push_back(JointIndex(n, {a, y}));
      }
    }
  }
  return Digraph(std::move(successors), JointNames(game));
}

Digraph JointStrictBestResponseDigraph(const SymmetricGame& game) {
  return JointResponseDigraph(game, Variant::kStrict);
}

Digraph JointWeakBetterResponseDigraph(const SymmetricGame& game) {
  return JointResponseDigraph(game, Variant::kWeak);
}

StrategySet PermittedDeviations(const SymmetricGame& game, Variant variant,
                                StrategyIndex current,
                                StrategyIndex opponent) {
  // Validates both indices.
  game.Payoff(Player::kRow, {current, opponent});
  const DeviationRule rule(game, variant);
  StrategySet result;
  for (std::size_t s = 0; s < game.num_strategies(); ++s) {
    if (rule.Permits(current, s, opponent)) result.push_back(s);
  }
  return result;
}

}  // namespace sinkeval
