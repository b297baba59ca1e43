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

#ifndef SINKEVAL_IO_H_
#define SINKEVAL_IO_H_

// File formats.
//
// Game JSON:
//   {"n": 3, "labels": ["a", "b", "c"], "payoff_row": [[...], ...],
//    "epsilon": 1e-9}
// "labels" and "epsilon" are optional; any other key is rejected.
//
// Game CSV: n lines of n comma-separated numbers (row player's payoffs).
//
// Stochastic game JSON:
//   {"states": [...], "actions": [...], "initial_dist": [...],
//    "discount1": 0.9, "discount2": 0.9,
//    "transitions": {"x|a1|a2": [p over states], ...},
//    "reward1": {"x|a1|a2": r, ...}, "reward2": {"x|a1|a2": r, ...}}
// Keys of the three maps use state and action names and must cover every
// (state, action, action) triple exactly once.

#include <string>

#include "json.hpp"
#include "sinkeval/game.h"
#include "sinkeval/metagame.h"

namespace sinkeval {

// All parsers throw SinkevalError (kParseError for malformed documents, or
// the validation error of the constructed object).
SymmetricGame GameFromJson(const nlohmann::json& doc);
SymmetricGame ParseGameJson(const std::string& text);
SymmetricGame ParseGameCsv(const std::string& text);
nlohmann::json GameToJson(const SymmetricGame& game);
// Pretty-printed JSON followed by a newline.
std::string SerializeGame(const SymmetricGame& game);

StochasticGame StochasticGameFromJson(const nlohmann::json& doc);
StochasticGame ParseStochasticGameJson(const std::string& text);

// Reads a whole file, or stdin when `path` is "-". Throws kParseError
// naming the path when it cannot be read.
std::string ReadInput(const std::string& path);

// Loads a game file; ".csv" paths are parsed as CSV, everything else
// (including stdin) as JSON.
SymmetricGame LoadGame(const std::string& path);

}  // namespace sinkeval

#endif  // SINKEVAL_IO_H_
