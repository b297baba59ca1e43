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

#ifndef SINKEVAL_METAGAME_H_
#define SINKEVAL_METAGAME_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sinkeval/game.h"

namespace sinkeval {

inline constexpr std::size_t kDefaultStrategyCap = 4096;

// Finite two-player stochastic game with a shared action set. Per-triple
// data is stored flat at TripleIndex(x, a1, a2).
struct StochasticGame {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::vector<double> initial_dist;
  std::vector<std::vector<double>> transitions;  // next-state distribution
  std::vector<double> reward1;
  std::vector<double> reward2;
  double discount1 = 0.9;
  double discount2 = 0.9;

  std::size_t num_states() const { return states.size(); }
  std::size_t num_actions() const { return actions.size(); }
  std::size_t TripleIndex(std::size_t x, std::size_t a1, std::size_t a2) const {
    return (x * actions.size() + a1) * actions.size() + a2;
  }

  // Throws kInvalidStochasticGame: empty/duplicate names, wrong sizes,
  // probability vectors that are negative or do not sum to 1 within 1e-12,
  // non-finite rewards, discounts outside (0, 1).
  void Validate() const;
};

// Stationary deterministic strategy: action index per state.
using DeterministicStrategy = std::vector<std::size_t>;

// All |A|^|X| strategies in lexicographic order: state 0 is the most
// significant digit and the action of the last state varies fastest.
// Throws kExplosionCap when the count exceeds `cap`.
std::vector<DeterministicStrategy> EnumerateStrategies(
    const StochasticGame& sg, std::size_t cap = kDefaultStrategyCap);

// Expected discounted payoffs (J^1, J^2) when player 1 follows s1 and
// player 2 follows s2, from an exact solve of v = r + beta P v per player.
// Throws kSingularSystem if the solve fails or its residual exceeds 1e-10.
std::pair<double, double> EvaluateJoint(const StochasticGame& sg,
                                        const DeterministicStrategy& s1,
                                        const DeterministicStrategy& s2);

// Symmetric meta-game over EnumerateStrategies(sg, cap). Entry (i, j) is
// J^1(s_i, s_j). Player 2's payoffs are evaluated separately and must
// satisfy |J^1(s_i, s_j) - J^2(s_j, s_i)| <= 1e-8, otherwise
// kAsymmetryDetected. Labels join the per-state action names with '-'.
SymmetricGame BuildMetaGame(const StochasticGame& sg,
                            std::size_t cap = kDefaultStrategyCap,
                            double epsilon = kDefaultEpsilon);

}  // namespace sinkeval

#endif  // SINKEVAL_METAGAME_H_
