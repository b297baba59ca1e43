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

#include "sinkeval/metagame.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <tuple>
#include <set>

#include "sinkeval/errors.h"

namespace sinkeval {
namespace {

constexpr double kProbabilityTolerance = 1e-12;
constexpr double kResidualTolerance = 1e-10;
constexpr double kSymmetryTolerance = 1e-8;

[[noreturn]] void Invalid(const std::string& message) {
  throw SinkevalError(ErrorCode::kInvalidStochasticGame, message);
}

void CheckDistribution(const std::vector<double>& p, std::size_t size,
                       const std::string& what) {
  if (p.size() != size) {
    Invalid(what + " has " + std::to_string(p.size()) + " entries, expected " +
            std::to_string(size));
  }
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) Invalid(what + " has a negative entry");
    total += v;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    Invalid(what + " sums to " + std::to_string(total));
  }
}

void CheckNames(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) Invalid(std::string("no ") + what);
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) Invalid(std::string("duplicate ") + what);
}

double SolveDiscounted(const StochasticGame& sg,
                       const DeterministicStrategy& s1,
                       const DeterministicStrategy& s2,
                       const std::vector<double>& reward, double discount) {
  const std::size_t m = sg.num_states();
  Eigen::MatrixXd transition(m, m);
  Eigen::VectorXd r(m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t t = sg.TripleIndex(x, s1[x], s2[x]);
    r(x) = reward[t];
    for (std::size_t y = 0; y < m; ++y) transition(x, y) = sg.transitions[t][y];
  }
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(m, m) - discount * transition;
  const Eigen::VectorXd v = system.fullPivLu().solve(r);
  const double residual = (v - r - discount * transition * v).lpNorm<Eigen::Infinity>();
  // Absolute for values of order one, relative beyond that.
  const double scale = std::max(1.0, v.lpNorm<Eigen::Infinity>());
  if (!v.allFinite() || !(residual <= kResidualTolerance * scale)) {
    throw SinkevalError(ErrorCode::kSingularSystem,
                        "policy evaluation residual " +
                            std::to_string(residual));
  }
  double value = 0.0;
  for (std::size_t x = 0; x < m; ++x) value += sg.initial_dist[x] * v(x);
  return value;
}

void CheckStrategy(const StochasticGame& sg, const DeterministicStrategy& s) {
  if (s.size() != sg.num_states()) {
    throw SinkevalError(ErrorCode::kInvalidArgument,
                        "strategy covers " + std::to_string(s.size()) +
                            " states, expected " +
                            std::to_string(sg.num_states()));
  }
  for (std::size_t a : s) {
    if (a >= sg.num_actions()) {
      throw SinkevalError(ErrorCode::kIndexOutOfRange,
                          "action index " + std::to_string(a));
    }
  }
}

}  // namespace

void StochasticGame::Validate() const {
  CheckNames(states, "states");
  CheckNames(actions, "actions");
  const std::size_t m = num_states();
  const std::size_t triples = m * num_actions() * num_actions();
  CheckDistribution(initial_dist, m, "initial distribution");
  if (transitions.size() != triples || reward1.size() != triples ||
      reward2.size() != triples) {
    Invalid("expected " + std::to_string(triples) +
            " (state, action, action) entries");
  }
  for (std::size_t t = 0; t < triples; ++t) {
    CheckDistribution(transitions[t], m,
                      "transition row " + std::to_string(t));
    if (!std::isfinite(reward1[t]) || !std::isfinite(reward2[t])) {
      Invalid("non-finite reward");
    }
  }
  for (double beta : {discount1, discount2}) {
    if (!(beta > 0.0 && beta < 1.0)) {
      Invalid("discount " + std::to_string(beta) + " outside (0, 1)");
    }
  }
}

std::vector<DeterministicStrategy> EnumerateStrategies(
    const StochasticGame& sg, std::size_t cap) {
  const std::size_t m = sg.num_states();
  const std::size_t k = sg.num_actions();
  std::size_t count = 1;
  for (std::size_t x = 0; x < m; ++x) {
    if (k != 0 && count > cap / k) {
      throw SinkevalError(ErrorCode::kExplosionCap,
                          std::to_string(k) + "^" + std::to_string(m) +
                              " strategies exceed the cap of " +
                              std::to_string(cap));
    }
    count *= k;
  }
  if (count > cap) {
    throw SinkevalError(ErrorCode::kExplosionCap,
                        std::to_string(count) + " strategies exceed the cap of " +
                            std::to_string(cap));
  }

  std::vector<DeterministicStrategy> strategies;
  strategies.reserve(count);
  DeterministicStrategy digits(m, 0);
  for (std::size_t i = 0; i < count; ++i) {
    strategies.push_back(digits);
    // Odometer increment, last state fastest.
    for (std::size_t x = m; x-- > 0;) {
      if (++digits[x] < k) break;
      digits[x] = 0;
    }
  }
  return strategies;
}

std::pair<double, double> EvaluateJoint(const StochasticGame& sg,
                                        const DeterministicStrategy& s1,
                                        const DeterministicStrategy& s2) {
  CheckStrategy(sg, s1);
  CheckStrategy(sg, s2);
  return {SolveDiscounted(sg, s1, s2, sg.reward1, sg.discount1),
          SolveDiscounted(sg, s1, s2, sg.reward2, sg.discount2)};
}

SymmetricGame BuildMetaGame(const StochasticGame& sg, std::size_t cap,
                            double epsilon) {
  sg.Validate();
  const auto strategies = EnumerateStrategies(sg, cap);
  const std::size_t n = strategies.size();

  std::vector<std::vector<double>> j1(n, std::vector<double>(n));
  std::vector<std::vector<double>> j2(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::tie(j1[i][j], j2[i][j]) =
          EvaluateJoint(sg, strategies[i], strategies[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double gap = std::abs(j1[i][j] - j2[j][i]);
      if (gap > kSymmetryTolerance) {
        throw SinkevalError(ErrorCode::kAsymmetryDetected,
                            "J1(s" + std::to_string(i + 1) + ", s" +
                                std::to_string(j + 1) + ") and J2(s" +
                                std::to_string(j + 1) + ", s" +
                                std::to_string(i + 1) + ") differ by " +
                                std::to_string(gap));
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : strategies) {
    std::string label;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (x > 0) label += '-';
      label += sg.actions[s[x]];
    }
    labels.push_back(std::move(label));
  }
  return SymmetricGame::Create(n, std::move(j1), std::move(labels), epsilon);
}

}  // namespace sinkeval
