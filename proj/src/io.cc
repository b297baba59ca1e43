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

#include "sinkeval/io.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "sinkeval/errors.h"

namespace sinkeval {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFailure(const std::string& message) {
  throw SinkevalError(ErrorCode::kParseError, message);
}

void RejectUnknownKeys(const json& doc, const std::set<std::string>& allowed,
                       const char* what) {
  if (!doc.is_object()) ParseFailure(std::string(what) + " must be an object");
  for (const auto& item : doc.items()) {
    if (!allowed.contains(item.key())) {
      ParseFailure(std::string("unknown key \"") + item.key() + "\" in " +
                   what);
    }
  }
}

const json& Required(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) ParseFailure(std::string("missing key \"") + key + "\"");
  return *it;
}

double Number(const json& value, const std::string& where) {
  if (!value.is_number()) ParseFailure(where + " must be a number");
  return value.get<double>();
}

std::vector<double> NumberArray(const json& value, const std::string& where) {
  if (!value.is_array()) ParseFailure(where + " must be an array");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(Number(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> StringArray(const json& value,
                                     const std::string& where) {
  if (!value.is_array()) ParseFailure(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) ParseFailure(where + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

json ParseJsonText(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    ParseFailure(std::string("malformed JSON: ") + e.what());
  }
}

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseCsvNumber(const std::string& cell, std::size_t line) {
  const std::string trimmed = Trim(cell);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(trimmed, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (trimmed.empty() || used != trimmed.size()) {
    ParseFailure("line " + std::to_string(line) + ": \"" + trimmed +
                 "\" is not a number");
  }
  return value;
}

// Map from "x|a1|a2" to the flat triple index.
std::map<std::string, std::size_t> TripleKeys(const StochasticGame& sg) {
  std::map<std::string, std::size_t> keys;
  for (std::size_t x = 0; x < sg.num_states(); ++x) {
    for (std::size_t a1 = 0; a1 < sg.num_actions(); ++a1) {
      for (std::size_t a2 = 0; a2 < sg.num_actions(); ++a2) {
        keys[sg.states[x] + "|" + sg.actions[a1] + "|" + sg.actions[a2]] =
            sg.TripleIndex(x, a1, a2);
      }
    }
  }
  return keys;
}

template <typename T, typename Convert>
std::vector<T> TripleMap(const json& value, const char* what,
                         const std::map<std::string, std::size_t>& keys,
                         Convert convert) {
  if (!value.is_object()) ParseFailure(std::string(what) + " must be an object");
  std::vector<T> out(keys.size());
  std::vector<bool> seen(keys.size(), false);
  for (const auto& item : value.items()) {
    auto it = keys.find(item.key());
    if (it == keys.end()) {
      ParseFailure(std::string(what) + ": unknown triple \"" + item.key() +
                   "\"");
    }
    out[it->second] = convert(item.value(), std::string(what) + "[\"" +
                                                 item.key() + "\"]");
    seen[it->second] = true;
  }
  for (const auto& [key, index] : keys) {
    if (!seen[index]) {
      throw SinkevalError(ErrorCode::kInvalidStochasticGame,
                          std::string(what) + ": missing triple \"" + key +
                              "\"");
    }
  }
  return out;
}

}  // namespace

SymmetricGame GameFromJson(const json& doc) {
  RejectUnknownKeys(doc, {"n", "labels", "payoff_row", "epsilon"}, "game");
  const json& n_value = Required(doc, "n");
  if (!n_value.is_number_integer() || n_value.get<std::int64_t>() < 0) {
    ParseFailure("\"n\" must be a non-negative integer");
  }
  const auto n = n_value.get<std::size_t>();
  const json& rows_value = Required(doc, "payoff_row");
  if (!rows_value.is_array()) ParseFailure("\"payoff_row\" must be an array");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < rows_value.size(); ++i) {
    rows.push_back(
        NumberArray(rows_value[i], "payoff_row[" + std::to_string(i) + "]"));
  }
  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels")) labels = StringArray(doc["labels"], "labels");
  double epsilon = kDefaultEpsilon;
  if (doc.contains("epsilon")) epsilon = Number(doc["epsilon"], "epsilon");
  return SymmetricGame::Create(n, std::move(rows), std::move(labels), epsilon);
}

SymmetricGame ParseGameJson(const std::string& text) {
  return GameFromJson(ParseJsonText(text));
}

SymmetricGame ParseGameCsv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(ParseCsvNumber(cell, line_number));
    }
    if (!line.empty() && Trim(line).back() == ',') {
      ParseFailure("line " + std::to_string(line_number) +
                   ": trailing comma");
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  return SymmetricGame::Create(n, std::move(rows));
}

json GameToJson(const SymmetricGame& game) {
  json out;
  out["n"] = game.num_strategies();
  out["labels"] = game.labels();
  out["payoff_row"] = game.PayoffRows();
  out["epsilon"] = game.epsilon();
  return out;
}

std::string SerializeGame(const SymmetricGame& game) {
  return GameToJson(game).dump(2) + "\n";
}

StochasticGame StochasticGameFromJson(const json& doc) {
  RejectUnknownKeys(doc,
                    {"states", "actions", "initial_dist", "discount1",
                     "discount2", "transitions", "reward1", "reward2"},
                    "stochastic game");
  StochasticGame sg;
  sg.states = StringArray(Required(doc, "states"), "states");
  sg.actions = StringArray(Required(doc, "actions"), "actions");
  sg.initial_dist = NumberArray(Required(doc, "initial_dist"), "initial_dist");
  sg.discount1 = Number(Required(doc, "discount1"), "discount1");
  sg.discount2 = Number(Required(doc, "discount2"), "discount2");
  const auto keys = TripleKeys(sg);
  if (keys.size() != sg.num_states() * sg.num_actions() * sg.num_actions()) {
    throw SinkevalError(ErrorCode::kInvalidStochasticGame,
                        "state and action names must be distinct");
  }
  sg.transitions = TripleMap<std::vector<double>>(
      Required(doc, "transitions"), "transitions", keys, NumberArray);
  sg.reward1 = TripleMap<double>(Required(doc, "reward1"), "reward1", keys,
                                 Number);
  sg.reward2 = TripleMap<double>(Required(doc, "reward2"), "reward2", keys,
                                 Number);
  sg.Validate();
  return sg;
}

StochasticGame ParseStochasticGameJson(const std::string& text) {
  return StochasticGameFromJson(ParseJsonText(text));
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) ParseFailure("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) ParseFailure("cannot read " + path);
  return buffer.str();
}

SymmetricGame LoadGame(const std::string& path) {
  const std::string text = ReadInput(path);
  const bool csv =
      path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  try {
    return csv ? ParseGameCsv(text) : ParseGameJson(text);
  } catch (const SinkevalError& e) {
    throw SinkevalError(e.code(), path + ": " + e.message());
  }
}

}  // namespace sinkeval
