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

#ifndef SINKEVAL_ORACLE_H_
#define SINKEVAL_ORACLE_H_

// Reference implementations and claim checkers. Nothing here is on the hot
// path; everything favours obviousness over speed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sinkeval/digraph.h"
#include "sinkeval/game.h"

namespace sinkeval {

inline constexpr std::size_t kBruteForceSccLimit = 64;
inline constexpr std::size_t kDefaultMaxAttempts = 10000;
// CheckTheorems skips the dense adjacency identity above this many
// strategies.
inline constexpr std::size_t kKroneckerCheckLimit = 40;

// SCC partition from the boolean reachability closure: u and v share a
// block iff each reaches the other. Blocks are sorted and ordered by their
// smallest node. Throws kTooLarge above kBruteForceSccLimit nodes.
std::vector<std::vector<NodeIndex>> BruteForceScc(const Digraph& g);

// Sorts a partition the same way BruteForceScc does.
std::vector<std::vector<NodeIndex>> CanonicalPartition(
    std::vector<std::vector<NodeIndex>> blocks);

// Each ordered pair (u, v), self-loops included, is an edge with
// probability `edge_probability`.
Digraph RandomDigraph(std::size_t node_count, double edge_probability,
                      std::uint64_t seed);

struct GameFilter {
  bool no_self_best_response = false;
  bool no_mutual_best_response_pairs = false;
  bool generic_best_responses = false;  // every B(s) is a singleton

  bool Accepts(const SymmetricGame& game) const;
};

// Uniform integer payoffs in [low, high], resampled until `filter` accepts.
// Deterministic in `seed`. Throws kInvalidArgument for n == 0 or
// low > high, kFilterExhausted after max_attempts rejected draws.
SymmetricGame RandomGame(std::size_t n, std::int64_t low, std::int64_t high,
                         const GameFilter& filter, std::uint64_t seed,
                         std::size_t max_attempts = kDefaultMaxAttempts);

enum class Verdict { kHolds, kViolated, kNotApplicable };

std::string_view VerdictName(Verdict verdict);

struct ClaimResult {
  std::string id;
  std::string statement;
  bool applicable = true;
  Verdict verdict = Verdict::kHolds;
  nlohmann::json witness;  // sets observed while evaluating the claim
};

struct TheoremReport {
  std::vector<ClaimResult> claims;
  nlohmann::json game;  // the game the claims were evaluated on

  bool AnyViolated() const;
  const ClaimResult* Find(std::string_view id) const;
  nlohmann::json ToJson() const;
};

// Claim identifiers reported by CheckTheorems.
namespace claims {
inline constexpr std::string_view kBdEqualsStrict = "bd_equals_strict_selfplay";
inline constexpr std::string_view kNdEqualsWeakSingleton =
    "nd_equals_weak_selfplay_singleton";
inline constexpr std::string_view kWeakSubsetNd = "weak_selfplay_subset_nd";
inline constexpr std::string_view kBdSubsetNd = "bd_subset_nd";
inline constexpr std::string_view kStrictSubsetNd = "strict_selfplay_subset_nd";
inline constexpr std::string_view kNdUniqueSink = "nd_unique_sink_equilibrium";
inline constexpr std::string_view kBdSinkMinSize = "bd_sinks_have_three_strategies";
inline constexpr std::string_view kKroneckerIdentity = "kronecker_identity";
}  // namespace claims

// Evaluates every structural claim on `game`. Claims whose hypothesis fails
// report kNotApplicable, with the observed sets kept in the witness.
TheoremReport CheckTheorems(const SymmetricGame& game);

}  // namespace sinkeval

#endif  // SINKEVAL_ORACLE_H_
