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

#include "sinkeval/oracle.h"

#include <algorithm>
#include <random>

#include "sinkeval/algebra.h"
#include "sinkeval/errors.h"
#include "sinkeval/io.h"
#include "sinkeval/metrics.h"
#include "sinkeval/response_graphs.h"

namespace sinkeval {
namespace {

using nlohmann::json;

bool IsSubset(const StrategySet& a, const StrategySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

json LabelsOf(const SymmetricGame& game, const StrategySet& set) {
  json out = json::array();
  for (StrategyIndex s : set) out.push_back(game.label(s));
  return out;
}

json ComponentsOf(const SymmetricGame& game, const SinkEquilibriumSet& sinks) {
  json out = json::array();
  for (const auto& component : sinks.components) {
    out.push_back(LabelsOf(game, component));
  }
  return out;
}

json JointComponentsOf(const SymmetricGame& game,
                       const SinkEquilibriumSet& sinks) {
  const std::size_t n = game.num_strategies();
  json out = json::array();
  for (const auto& component : sinks.components) {
    json members = json::array();
    for (NodeIndex r : component) {
      members.push_back(FormatJointStrategy(game, JointFromIndex(n, r)));
    }
    out.push_back(std::move(members));
  }
  return out;
}

ClaimResult Claim(std::string_view id, std::string statement, bool applicable,
                  bool holds, json witness) {
  ClaimResult result;
  result.id = std::string(id);
  result.statement = std::move(statement);
  result.applicable = applicable;
  result.verdict = !applicable ? Verdict::kNotApplicable
                   : holds     ? Verdict::kHolds
                               : Verdict::kViolated;
  result.witness = std::move(witness);
  return result;
}

}  // namespace

std::vector<std::vector<NodeIndex>> CanonicalPartition(
    std::vector<std::vector<NodeIndex>> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<std::vector<NodeIndex>> BruteForceScc(const Digraph& g) {
  const std::size_t n = g.node_count();
  if (n > kBruteForceSccLimit) {
    throw SinkevalError(ErrorCode::kTooLarge,
                        std::to_string(n) + " nodes exceed the limit of " +
                            std::to_string(kBruteForceSccLimit));
  }
  // reach[u][v]: v reachable from u by a path of length >= 0.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    reach[u][u] = true;
    for (NodeIndex v : g.Successors(u)) reach[u][v] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<NodeIndex>> blocks;
  for (std::size_t u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    std::vector<NodeIndex> block;
    for (std::size_t v = u; v < n; ++v) {
      if (reach[u][v] && reach[v][u]) {
        block.push_back(v);
        assigned[v] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  return CanonicalPartition(std::move(blocks));
}

Digraph RandomDigraph(std::size_t node_count, double edge_probability,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(edge_probability);
  std::vector<std::vector<NodeIndex>> successors(node_count);
  for (std::size_t u = 0; u < node_count; ++u) {
    for (std::size_t v = 0; v < node_count; ++v) {
      if (edge(rng)) successors[u].push_back(v);
    }
  }
  return Digraph(std::move(successors));
}

bool GameFilter::Accepts(const SymmetricGame& game) const {
  if (no_self_best_response && !SelfBestResponseStrategies(game).empty()) {
    return false;
  }
  if (no_mutual_best_response_pairs &&
      !MutualBestResponsePairs(game).empty()) {
    return false;
  }
  if (generic_best_responses) {
    for (std::size_t s = 0; s < game.num_strategies(); ++s) {
      if (game.BestResponses(s).size() != 1) return false;
    }
  }
  return true;
}

SymmetricGame RandomGame(std::size_t n, std::int64_t low, std::int64_t high,
                         const GameFilter& filter, std::uint64_t seed,
                         std::size_t max_attempts) {
  if (n == 0) {
    throw SinkevalError(ErrorCode::kInvalidArgument,
                        "a game needs at least one strategy");
  }
  if (low > high) {
    throw SinkevalError(ErrorCode::kInvalidArgument,
                        "payoff range [" + std::to_string(low) + ", " +
                            std::to_string(high) + "] is empty");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> payoff(low, high);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (auto& row : rows) {
      for (auto& v : row) v = static_cast<double>(payoff(rng));
    }
    SymmetricGame game = SymmetricGame::Create(n, std::move(rows));
    if (filter.Accepts(game)) return game;
  }
  throw SinkevalError(ErrorCode::kFilterExhausted,
                      "no game accepted after " +
                          std::to_string(max_attempts) + " attempts");
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

bool TheoremReport::AnyViolated() const {
  return std::any_of(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.verdict == Verdict::kViolated;
  });
}

const ClaimResult* TheoremReport::Find(std::string_view id) const {
  for (const auto& claim : claims) {
    if (claim.id == id) return &claim;
  }
  return nullptr;
}

nlohmann::json TheoremReport::ToJson() const {
  json out;
  out["violated"] = AnyViolated();
  json list = json::array();
  for (const auto& claim : claims) {
    list.push_back({{"id", claim.id},
                    {"statement", claim.statement},
                    {"applicable", claim.applicable},
                    {"verdict", VerdictName(claim.verdict)},
                    {"witness", claim.witness}});
  }
  out["claims"] = std::move(list);
  if (AnyViolated()) out["counterexample"] = game;
  return out;
}

TheoremReport CheckTheorems(const SymmetricGame& game) {
  const std::size_t n = game.num_strategies();
  const EvaluationReport bd = EvaluateBestDominating(game);
  const EvaluationReport nd = EvaluateNonDominated(game);
  const SinkEquilibriumSet strict_sinks =
      JointSinkEquilibria(game, Variant::kStrict);
  const SinkEquilibriumSet weak_sinks = JointSinkEquilibria(game, Variant::kWeak);
  const StrategySet strict_set = StrategiesInJointSinks(n, strict_sinks);
  const StrategySet weak_set = StrategiesInJointSinks(n, weak_sinks);

  const StrategySet self_br = SelfBestResponseStrategies(game);
  const auto mutual = MutualBestResponsePairs(game);
  const bool regular = self_br.empty() && mutual.empty();

  json mutual_json = json::array();
  for (const auto& [a, b] : mutual) {
    mutual_json.push_back({game.label(a), game.label(b)});
  }
  const json hypothesis = {{"self_best_response", LabelsOf(game, self_br)},
                           {"mutual_best_response_pairs", mutual_json}};

  TheoremReport report;
  report.game = GameToJson(game);

  {
    json w = hypothesis;
    w["bd_preferred"] = LabelsOf(game, bd.preferred);
    w["strict_selfplay"] = LabelsOf(game, strict_set);
    w["strict_sink_equilibria"] = JointComponentsOf(game, strict_sinks);
    report.claims.push_back(
        Claim(claims::kBdEqualsStrict,
              "without self best responses and mutual best-response pairs, "
              "BD-preferred strategies equal strict self-play strategies",
              regular, bd.preferred == strict_set, std::move(w)));
  }
  {
    const bool singleton = nd.sink_equilibria.components.size() == 1 &&
                           nd.sink_equilibria.components.front().size() == 1;
    json w = {{"nd_preferred", LabelsOf(game, nd.preferred)},
              {"weak_selfplay", LabelsOf(game, weak_set)},
              {"weak_sink_equilibria", JointComponentsOf(game, weak_sinks)}};
    report.claims.push_back(
        Claim(claims::kNdEqualsWeakSingleton,
              "if the non-dominated sink equilibrium is a singleton, "
              "ND-preferred strategies equal weak self-play strategies",
              singleton, nd.preferred == weak_set, std::move(w)));
  }
  report.claims.push_back(Claim(
      claims::kWeakSubsetNd,
      "weak self-play strategies are ND-preferred", true,
      IsSubset(weak_set, nd.preferred),
      {{"weak_selfplay", LabelsOf(game, weak_set)},
       {"nd_preferred", LabelsOf(game, nd.preferred)}}));
  report.claims.push_back(Claim(
      claims::kBdSubsetNd, "BD-preferred strategies are ND-preferred", true,
      IsSubset(bd.preferred, nd.preferred),
      {{"bd_preferred", LabelsOf(game, bd.preferred)},
       {"nd_preferred", LabelsOf(game, nd.preferred)}}));
  {
    json w = hypothesis;
    w["strict_selfplay"] = LabelsOf(game, strict_set);
    w["nd_preferred"] = LabelsOf(game, nd.preferred);
    report.claims.push_back(
        Claim(claims::kStrictSubsetNd,
              "without self best responses and mutual best-response pairs, "
              "strict self-play strategies are ND-preferred",
              regular, IsSubset(strict_set, nd.preferred), std::move(w)));
  }
  report.claims.push_back(
      Claim(claims::kNdUniqueSink,
            "the non-dominated digraph has exactly one sink equilibrium", true,
            nd.sink_equilibria.components.size() == 1,
            {{"nd_sink_equilibria", ComponentsOf(game, nd.sink_equilibria)}}));
  {
    bool all_large = true;
    for (const auto& component : bd.sink_equilibria.components) {
      if (component.size() < 3) all_large = false;
    }
    json w = hypothesis;
    w["bd_sink_equilibria"] = ComponentsOf(game, bd.sink_equilibria);
    report.claims.push_back(
        Claim(claims::kBdSinkMinSize,
              "without self best responses and mutual best-response pairs, "
              "every best-response sink equilibrium has at least three "
              "strategies",
              regular, all_large, std::move(w)));
  }
  if (n > kKroneckerCheckLimit) {
    report.claims.push_back(Claim(
        claims::kKroneckerIdentity,
        "the joint strict adjacency equals the Kronecker-sum formula applied "
        "to the best-response adjacency",
        false, true,
        {{"skipped", "dense n^2 x n^2 matrices too large"}, {"n", n}}));
  } else {
    const IntMatrix from_formula =
        JointStrictAdjacencyFromFormula(AdjacencyMatrix(BestResponseDigraph(game)));
    const IntMatrix direct =
        AdjacencyMatrix(JointStrictBestResponseDigraph(game));
    const std::size_t differences = from_formula.CountDifferences(direct);
    report.claims.push_back(Claim(
        claims::kKroneckerIdentity,
        "the joint strict adjacency equals the Kronecker-sum formula applied "
        "to the best-response adjacency",
        true, differences == 0, {{"differing_entries", differences}}));
  }
  return report;
}

}  // namespace sinkeval
