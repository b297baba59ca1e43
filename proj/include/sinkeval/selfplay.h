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

#ifndef SINKEVAL_SELFPLAY_H_
#define SINKEVAL_SELFPLAY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sinkeval/game.h"
#include "sinkeval/response_graphs.h"

namespace sinkeval {

// Self-play walks the joint-strategy response digraph of a variant:
//
//   each episode one player (row or column, each with probability 1/2) is
//   chosen; it looks at the strategies it may switch to against the
//   opponent's current strategy (PermittedDeviations) and moves to one of
//   them drawn uniformly. Under kStrict an empty candidate set means the
//   player keeps its strategy; under kWeak the current strategy is itself a
//   candidate.
//
// The random source is std::mt19937_64 seeded with `seed`; draws use
// std::uniform_int_distribution. Traces are reproducible for a given
// standard library, not across standard library implementations.
struct SelfPlayConfig {
  std::size_t tau_max = 300;
  std::size_t memory_length = 10;
  std::uint64_t seed = 0;
  // Starting joint strategy; drawn uniformly from S x S when absent.
  std::optional<JointStrategy> initial;
};

// Throws kInvalidConfig unless 1 <= memory_length <= tau_max.
void ValidateConfig(const SelfPlayConfig& config);

struct Episode {
  Player player = Player::kRow;
  JointStrategy before;
  JointStrategy after;
};

struct SelfPlayTrace {
  Variant variant = Variant::kStrict;
  JointStrategy initial;
  std::vector<Episode> episodes;           // tau_max entries
  std::vector<JointStrategy> final_memory;  // last memory_length states
  StrategySet learnt_strategies;            // strategies in final_memory
};

// Precomputed candidate sets for every (current, opponent) pair.
class DeviationTable {
 public:
  DeviationTable(const SymmetricGame& game, Variant variant);

  const StrategySet& Candidates(StrategyIndex current,
                                StrategyIndex opponent) const {
    return table_[current * n_ + opponent];
  }
  std::size_t num_strategies() const { return n_; }
  Variant variant() const { return variant_; }

 private:
  std::size_t n_;
  Variant variant_;
  std::vector<StrategySet> table_;
};

SelfPlayTrace RunSelfPlay(const SymmetricGame& game, Variant variant,
                          const SelfPlayConfig& config);
SelfPlayTrace RunSelfPlay(const DeviationTable& table,
                          const SelfPlayConfig& config);

// Seed of run `run_index` in a batch: two rounds of the SplitMix64
// finalizer over base_seed and run_index.
std::uint64_t DeriveRunSeed(std::uint64_t base_seed, std::uint64_t run_index);

struct BatchOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Runs `runs` independent self-plays. Run k uses seed
// DeriveRunSeed(base.seed, k) and a uniformly drawn initial joint strategy
// (base.initial is ignored). frequency[s] is the fraction of runs whose
// learnt strategies contain s. Result is independent of the thread count.
// Throws kInvalidConfig for a bad config or runs == 0.
std::vector<double> BatchFrequencies(const SymmetricGame& game,
                                     Variant variant,
                                     const SelfPlayConfig& base,
                                     std::size_t runs,
                                     const BatchOptions& options = {});

}  // namespace sinkeval

#endif  // SINKEVAL_SELFPLAY_H_
