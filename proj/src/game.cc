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

#include "sinkeval/game.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

#include "sinkeval/errors.h"

namespace sinkeval {

SymmetricGame SymmetricGame::Create(
    std::size_t n, std::vector<std::vector<double>> payoff_row,
    std::optional<std::vector<std::string>> labels, double epsilon) {
  if (n == 0) {
    throw SinkevalError(ErrorCode::kDimensionMismatch,
                        "a game needs at least one strategy");
  }
  if (payoff_row.size() != n) {
    throw SinkevalError(ErrorCode::kDimensionMismatch,
                        "payoff matrix has " +
                            std::to_string(payoff_row.size()) +
                            " rows, expected " + std::to_string(n));
  }
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw SinkevalError(ErrorCode::kInvalidArgument,
                        "epsilon must be finite and non-negative");
  }

  SymmetricGame game;
  game.n_ = n;
  game.epsilon_ = epsilon;
  game.payoffs_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (payoff_row[i].size() != n) {
      throw SinkevalError(ErrorCode::kDimensionMismatch,
                          "payoff row " + std::to_string(i) + " has " +
                              std::to_string(payoff_row[i].size()) +
                              " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(payoff_row[i][j])) {
        throw SinkevalError(ErrorCode::kNonFiniteEntry,
                            "payoff (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") is not finite");
      }
      game.payoffs_.push_back(payoff_row[i][j]);
    }
  }

  if (labels.has_value()) {
    if (labels->size() != n) {
      throw SinkevalError(ErrorCode::kDimensionMismatch,
                          "expected " + std::to_string(n) + " labels, got " +
                              std::to_string(labels->size()));
    }
    std::set<std::string> seen;
    for (const auto& label : *labels) {
      if (!seen.insert(label).second) {
        throw SinkevalError(ErrorCode::kDuplicateLabel,
                            "label '" + label + "' appears more than once");
      }
    }
    game.labels_ = std::move(*labels);
  } else {
    game.labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      game.labels_.push_back("s" + std::to_string(i + 1));
    }
  }
  return game;
}

const std::string& SymmetricGame::label(StrategyIndex s) const {
  CheckIndex(s);
  return labels_[s];
}

void SymmetricGame::CheckIndex(StrategyIndex s) const {
  if (s >= n_) {
    throw SinkevalError(ErrorCode::kIndexOutOfRange,
                        "strategy index " + std::to_string(s) +
                            " out of range for " + std::to_string(n_) +
                            " strategies");
  }
}

double SymmetricGame::Payoff(Player player, JointStrategy joint) const {
  CheckIndex(joint.row);
  CheckIndex(joint.col);
  return player == Player::kRow ? RowPayoff(joint.row, joint.col)
                                : RowPayoff(joint.col, joint.row);
}

std::vector<std::vector<double>> SymmetricGame::PayoffRows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    rows[i].assign(payoffs_.begin() + i * n_, payoffs_.begin() + (i + 1) * n_);
  }
  return rows;
}

double SymmetricGame::BestPayoffAgainst(StrategyIndex opponent) const {
  double best = RowPayoff(0, opponent);
  for (std::size_t s = 1; s < n_; ++s) {
    best = std::max(best, RowPayoff(s, opponent));
  }
  return best;
}

StrategySet SymmetricGame::BestResponses(StrategyIndex opponent) const {
  CheckIndex(opponent);
  const double best = BestPayoffAgainst(opponent);
  StrategySet result;
  for (std::size_t s = 0; s < n_; ++s) {
    if (AtLeast(RowPayoff(s, opponent), best)) result.push_back(s);
  }
  assert(!result.empty());
  return result;
}

bool SymmetricGame::IsBestResponse(StrategyIndex candidate,
                                   StrategyIndex opponent) const {
  CheckIndex(candidate);
  CheckIndex(opponent);
  return AtLeast(RowPayoff(candidate, opponent), BestPayoffAgainst(opponent));
}

StrategySet SelfBestResponseStrategies(const SymmetricGame& game) {
  StrategySet result;
  for (std::size_t s = 0; s < game.num_strategies(); ++s) {
    if (game.IsBestResponse(s, s)) result.push_back(s);
  }
  return result;
}

std::vector<std::pair<StrategyIndex, StrategyIndex>> MutualBestResponsePairs(
    const SymmetricGame& game) {
  std::vector<std::pair<StrategyIndex, StrategyIndex>> pairs;
  const std::size_t n = game.num_strategies();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (game.IsBestResponse(b, a) && game.IsBestResponse(a, b)) {
        pairs.emplace_back(a, b);
      }
    }
  }
  return pairs;
}

std::string FormatStrategySet(const SymmetricGame& game,
                              const StrategySet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += game.label(set[i]);
  }
  out += "}";
  return out;
}

std::string FormatJointStrategy(const SymmetricGame& game,
                                JointStrategy joint) {
  return "(" + game.label(joint.row) + "," + game.label(joint.col) + ")";
}

}  // namespace sinkeval
