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

#include "sinkeval/selfplay.h"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "sinkeval/errors.h"

namespace sinkeval {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::size_t Draw(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<std::size_t> dist(0, count - 1);
  return dist(rng);
}

}  // namespace

void ValidateConfig(const SelfPlayConfig& config) {
  if (config.tau_max == 0) {
    throw SinkevalError(ErrorCode::kInvalidConfig, "tau_max must be positive");
  }
  if (config.memory_length == 0) {
    throw SinkevalError(ErrorCode::kInvalidConfig,
                        "memory length must be positive");
  }
  if (config.memory_length > config.tau_max) {
    throw SinkevalError(ErrorCode::kInvalidConfig,
                        "memory length " +
                            std::to_string(config.memory_length) +
                            " exceeds tau_max " +
                            std::to_string(config.tau_max));
  }
}

DeviationTable::DeviationTable(const SymmetricGame& game, Variant variant)
    : n_(game.num_strategies()), variant_(variant), table_(n_ * n_) {
  for (std::size_t current = 0; current < n_; ++current) {
    for (std::size_t opponent = 0; opponent < n_; ++opponent) {
      table_[current * n_ + opponent] =
          PermittedDeviations(game, variant, current, opponent);
    }
  }
}

SelfPlayTrace RunSelfPlay(const SymmetricGame& game, Variant variant,
                          const SelfPlayConfig& config) {
  ValidateConfig(config);
  return RunSelfPlay(DeviationTable(game, variant), config);
}

SelfPlayTrace RunSelfPlay(const DeviationTable& table,
                          const SelfPlayConfig& config) {
  ValidateConfig(config);
  const std::size_t n = table.num_strategies();
  std::mt19937_64 rng(config.seed);

  SelfPlayTrace trace;
  trace.variant = table.variant();
  if (config.initial.has_value()) {
    if (config.initial->row >= n || config.initial->col >= n) {
      throw SinkevalError(ErrorCode::kInvalidConfig,
                          "initial joint strategy out of range");
    }
    trace.initial = *config.initial;
  } else {
    const std::size_t r = Draw(rng, n * n);
    trace.initial = {r / n, r % n};
  }

  trace.episodes.reserve(config.tau_max);
  JointStrategy state = trace.initial;
  for (std::size_t tau = 0; tau < config.tau_max; ++tau) {
    Episode episode;
    episode.player = Draw(rng, 2) == 0 ? Player::kRow : Player::kColumn;
    episode.before = state;
    const bool row = episode.player == Player::kRow;
    const StrategyIndex mine = row ? state.row : state.col;
    const StrategyIndex theirs = row ? state.col : state.row;
    const StrategySet& candidates = table.Candidates(mine, theirs);
    StrategyIndex next = mine;
    if (!candidates.empty()) next = candidates[Draw(rng, candidates.size())];
    (row ? state.row : state.col) = next;
    episode.after = state;
    trace.episodes.push_back(episode);
  }

  std::vector<bool> learnt(n, false);
  for (std::size_t t = config.tau_max - config.memory_length;
       t < config.tau_max; ++t) {
    const JointStrategy joint = trace.episodes[t].after;
    trace.final_memory.push_back(joint);
    learnt[joint.row] = true;
    learnt[joint.col] = true;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (learnt[s]) trace.learnt_strategies.push_back(s);
  }
  return trace;
}

std::uint64_t DeriveRunSeed(std::uint64_t base_seed, std::uint64_t run_index) {
  return SplitMix64(SplitMix64(base_seed) ^ run_index);
}

std::vector<double> BatchFrequencies(const SymmetricGame& game,
                                     Variant variant,
                                     const SelfPlayConfig& base,
                                     std::size_t runs,
                                     const BatchOptions& options) {
  ValidateConfig(base);
  if (runs == 0) {
    throw SinkevalError(ErrorCode::kInvalidConfig, "runs must be positive");
  }
  const std::size_t n = game.num_strategies();
  const DeviationTable table(game, variant);

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, runs));

  // Each worker owns a private count vector; summing integer counts makes
  // the result independent of scheduling.
  std::vector<std::vector<std::size_t>> counts(threads,
                                               std::vector<std::size_t>(n, 0));
  std::atomic<std::size_t> next_run{0};
  auto worker = [&](unsigned id) {
    SelfPlayConfig config = base;
    config.initial.reset();
    for (std::size_t k = next_run++; k < runs; k = next_run++) {
      config.seed = DeriveRunSeed(base.seed, k);
      const SelfPlayTrace trace = RunSelfPlay(table, config);
      for (StrategyIndex s : trace.learnt_strategies) ++counts[id][s];
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }

  std::vector<double> frequency(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t total = 0;
    for (const auto& c : counts) total += c[s];
    frequency[s] = static_cast<double>(total) / static_cast<double>(runs);
  }
  return frequency;
}

}  // namespace sinkeval
