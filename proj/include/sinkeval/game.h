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

#ifndef SINKEVAL_GAME_H_
#define SINKEVAL_GAME_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sinkeval {

using StrategyIndex = std::size_t;

// Sorted, duplicate-free list of strategy indices.
using StrategySet = std::vector<StrategyIndex>;

inline constexpr double kDefaultEpsilon = 1e-9;

enum class Player { kRow = 1, kColumn = 2 };

// (row player's strategy, column player's strategy).
struct JointStrategy {
  StrategyIndex row = 0;
  StrategyIndex col = 0;

  friend auto operator<=>(const JointStrategy&, const JointStrategy&) = default;
};

// Two-player symmetric normal-form game. Only the row player's payoffs are
// stored; the column player's payoff at (a, b) is the row player's payoff
// at (b, a). Every payoff comparison (>=, >, =) is made with tolerance
// `epsilon()`. Immutable once constructed.
class SymmetricGame {
 public:
  // Validates that `payoff_row` is n x n with finite entries, that `labels`
  // (when given) has n distinct entries and that epsilon is finite and
  // non-negative. Labels default to "s1".."sn".
  //
  // Throws SinkevalError with kDimensionMismatch, kNonFiniteEntry,
  // kDuplicateLabel or kInvalidArgument.
  static SymmetricGame Create(
      std::size_t n, std::vector<std::vector<double>> payoff_row,
      std::optional<std::vector<std::string>> labels = std::nullopt,
      double epsilon = kDefaultEpsilon);

  std::size_t num_strategies() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(StrategyIndex s) const;
  double epsilon() const { return epsilon_; }

  // J^1(row, col) without bounds checking beyond a debug assert.
  double RowPayoff(StrategyIndex row, StrategyIndex col) const {
    return payoffs_[row * n_ + col];
  }

  // Payoff of `player` under joint strategy `joint`. Throws kIndexOutOfRange.
  double Payoff(Player player, JointStrategy joint) const;

  // Payoff matrix of the row player as nested rows.
  std::vector<std::vector<double>> PayoffRows() const;

  // Strategies whose payoff against `opponent` is within epsilon of the best
  // achievable payoff against `opponent`. Never empty. Throws
  // kIndexOutOfRange.
  StrategySet BestResponses(StrategyIndex opponent) const;

  bool IsBestResponse(StrategyIndex candidate, StrategyIndex opponent) const;

  // Tolerant comparisons of two payoff values.
  bool StrictlyGreater(double a, double b) const { return a > b + epsilon_; }
  bool AtLeast(double a, double b) const { return a >= b - epsilon_; }

  friend bool operator==(const SymmetricGame&, const SymmetricGame&) = default;

 private:
  SymmetricGame() = default;

  void CheckIndex(StrategyIndex s) const;
  double BestPayoffAgainst(StrategyIndex opponent) const;

  std::size_t n_ = 0;
  std::vector<double> payoffs_;  // row-major n x n
  std::vector<std::string> labels_;
  double epsilon_ = kDefaultEpsilon;
};

// Strategies s with s in B(s); (s, s) is then a pure Nash equilibrium.
StrategySet SelfBestResponseStrategies(const SymmetricGame& game);

// Unordered pairs {a, b}, a != b, each a best response to the other. Each
// pair is reported once with first < second; the list is sorted.
std::vector<std::pair<StrategyIndex, StrategyIndex>> MutualBestResponsePairs(
    const SymmetricGame& game);

// "{s1, s3}" using the game's labels.
std::string FormatStrategySet(const SymmetricGame& game,
                              const StrategySet& set);

// "(s1,s2)" using the game's labels.
std::string FormatJointStrategy(const SymmetricGame& game,
                                JointStrategy joint);

}  // namespace sinkeval

#endif  // SINKEVAL_GAME_H_
