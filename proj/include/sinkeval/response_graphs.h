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

#ifndef SINKEVAL_RESPONSE_GRAPHS_H_
#define SINKEVAL_RESPONSE_GRAPHS_H_

#include <cstddef>
#include <string_view>

#include "sinkeval/digraph.h"
#include "sinkeval/game.h"

namespace sinkeval {

// Which single-player deviation rule drives a joint-strategy digraph (and
// the matching self-play dynamics).
enum class Variant {
  kStrict,  // deviate only to a best response that strictly improves
  kWeak,    // deviate to any strategy that does not lower the payoff
};

std::string_view VariantName(Variant variant);

// Joint strategy (i, j) of an n-strategy game lives at node i * n + j.
inline NodeIndex JointIndex(std::size_t n, JointStrategy joint) {
  return joint.row * n + joint.col;
}
inline JointStrategy JointFromIndex(std::size_t n, NodeIndex r) {
  return {r / n, r % n};
}

// Edge a -> b iff b is a best response to a.
Digraph BestResponseDigraph(const SymmetricGame& game);

// Edge a -> b iff some opponent strategy s gives J^1(b, s) >= J^1(a, s).
// Every node carries a self-loop.
Digraph NonDominatedDigraph(const SymmetricGame& game);

// n^2 nodes. Edge between joint strategies differing in exactly one
// player's strategy, where the deviating player moves to a best response to
// the unchanged opponent strategy and gains strictly more than epsilon.
Digraph JointStrictBestResponseDigraph(const SymmetricGame& game);

// n^2 nodes. Edge between joint strategies differing in exactly one
// player's strategy, where the deviating player's payoff does not drop by
// more than epsilon. No self-loops.
Digraph JointWeakBetterResponseDigraph(const SymmetricGame& game);

Digraph JointResponseDigraph(const SymmetricGame& game, Variant variant);

// Strategies a player currently on `current` may switch to against a fixed
// `opponent` under `variant`. For kWeak the result always contains
// `current`; for kStrict it never does. Shared by the joint digraphs and by
// self-play so both follow one rule.
StrategySet PermittedDeviations(const SymmetricGame& game, Variant variant,
                                StrategyIndex current, StrategyIndex opponent);

}  // namespace sinkeval

#endif  // SINKEVAL_RESPONSE_GRAPHS_H_
