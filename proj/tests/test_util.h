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

#ifndef SINKEVAL_TESTS_TEST_UTIL_H_
#define SINKEVAL_TESTS_TEST_UTIL_H_

// Fixture loading and reference computations written independently of the
// library's graph code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "sinkeval/errors.h"
#include "sinkeval/game.h"
#include "sinkeval/io.h"

namespace sinkeval::testing {

// Error code thrown by `f`; records a test failure if nothing is thrown.
inline ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const SinkevalError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no SinkevalError thrown";
  return ErrorCode::kParseError;
}

inline std::string DataPath(const std::string& name) {
  return std::string(SINKEVAL_TEST_DATA_DIR) + "/" + name;
}

inline SymmetricGame LoadFixture(const std::string& name) {
  return LoadGame(DataPath(name));
}

inline const std::vector<std::string>& GameFixtures() {
  static const std::vector<std::string> names = {"mutual_pair.json", "self_response.json",
                                                 "dominated.json", "two_cycles.json"};
  return names;
}

// 0-based indices from 1-based strategy numbers, e.g. S({1, 2}) = {0, 1}.
inline StrategySet S(std::initializer_list<std::size_t> one_based) {
  StrategySet out;
  for (std::size_t s : one_based) out.push_back(s - 1);
  return out;
}

inline std::size_t J(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * n + (j - 1);
}

// Raw payoff table copied out of the game so the oracles below use nothing
// but arithmetic on numbers.
struct RawGame {
  std::size_t n;
  std::vector<std::vector<double>> a;  // row player's payoffs
  double eps;

  explicit RawGame(const SymmetricGame& game)
      : n(game.num_strategies()), a(game.PayoffRows()), eps(game.epsilon()) {}

  double Row(std::size_t i, std::size_t j) const { return a[i][j]; }
  double Col(std::size_t i, std::size_t j) const { return a[j][i]; }

  bool RowBest(std::size_t i, std::size_t j) const {
    double best = a[0][j];
    for (std::size_t k = 1; k < n; ++k) best = std::max(best, a[k][j]);
    return a[i][j] >= best - eps;
  }
  bool ColBest(std::size_t i, std::size_t j) const { return RowBest(j, i); }
};

// Joint edges enumerated straight from the definitions: one player deviates
// and either moves to a best response with a strict gain, or to anything
// at least as good.
inline std::set<std::pair<std::size_t, std::size_t>> BruteJointEdges(
    const SymmetricGame& game, bool strict) {
  const RawGame g(game);
  const std::size_t n = g.n;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        const bool ok = strict ? g.RowBest(k, j) && g.Row(k, j) > g.Row(i, j) + g.eps
                               : g.Row(k, j) >= g.Row(i, j) - g.eps;
        if (ok) edges.insert({i * n + j, k * n + j});
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        const bool ok = strict ? g.ColBest(i, k) && g.Col(i, k) > g.Col(i, j) + g.eps
                               : g.Col(i, k) >= g.Col(i, j) - g.eps;
        if (ok) edges.insert({i * n + j, i * n + k});
      }
    }
  }
  return edges;
}

inline SymmetricGame AffineImage(const SymmetricGame& game, double scale,
                                 double shift) {
  auto rows = game.PayoffRows();
  for (auto& row : rows) {
    for (auto& v : row) v = scale * v + shift;
  }
  return SymmetricGame::Create(game.num_strategies(), std::move(rows),
                               game.labels(), scale * game.epsilon());
}

}  // namespace sinkeval::testing

#endif  // SINKEVAL_TESTS_TEST_UTIL_H_
