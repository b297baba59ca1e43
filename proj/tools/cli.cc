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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sinkeval/digraph.h"
#include "sinkeval/errors.h"
#include "sinkeval/game.h"
#include "sinkeval/io.h"
#include "sinkeval/metagame.h"
#include "sinkeval/metrics.h"
#include "sinkeval/oracle.h"
#include "sinkeval/response_graphs.h"
#include "sinkeval/selfplay.h"

namespace sinkeval {
namespace {

using nlohmann::json;

struct AnalyzeArgs {
  std::string game_file;
  std::string metric = "both";
  std::string dot_prefix;
  bool json_output = false;
  bool omit_self_loops = false;
};

struct SelfPlayArgs {
  std::string game_file;
  std::string variant = "strict";
  std::size_t tau_max = 300;
  std::size_t memory = 10;
  std::size_t runs = 10000;
  std::uint64_t seed = 0;
  std::string csv_path;
  unsigned threads = 0;
};

struct VerifyArgs {
  std::string game_file;
};

struct GenerateArgs {
  std::size_t n = 0;
  std::int64_t low = 0;
  std::int64_t high = 9;
  std::vector<std::string> filters;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string out_dir;
};

struct MetagameArgs {
  std::string stoch_file;
  std::string out_path;
  std::size_t cap = kDefaultStrategyCap;
};

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  file << contents;
  file.close();
  if (!file) {
    throw SinkevalError(ErrorCode::kInvalidArgument, "cannot write " + path);
  }
}

std::vector<MetricKind> MetricsFor(const std::string& metric) {
  if (metric == "bd") return {MetricKind::kBestDominating};
  if (metric == "nd") return {MetricKind::kNonDominated};
  return {MetricKind::kBestDominating, MetricKind::kNonDominated};
}

std::string Upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

json LabelArray(const SymmetricGame& game, const StrategySet& set) {
  json out = json::array();
  for (StrategyIndex s : set) out.push_back(game.label(s));
  return out;
}

int Analyze(const AnalyzeArgs& args, std::ostream& out) {
  const SymmetricGame game = LoadGame(args.game_file);
  const auto self_br = SelfBestResponseStrategies(game);
  const auto mutual = MutualBestResponsePairs(game);

  json doc;
  doc["n"] = game.num_strategies();
  doc["self_best_responses"] = LabelArray(game, self_br);
  doc["mutual_best_response_pairs"] = json::array();
  for (const auto& [a, b] : mutual) {
    doc["mutual_best_response_pairs"].push_back(
        {game.label(a), game.label(b)});
  }

  std::ostringstream text;
  text << "strategies: " << game.num_strategies() << "\n";
  text << "self best-response strategies: "
       << FormatStrategySet(game, self_br) << "\n";
  text << "mutual best-response pairs:";
  if (mutual.empty()) text << " none";
  for (const auto& [a, b] : mutual) {
    text << " " << FormatJointStrategy(game, {a, b});
  }
  text << "\n";

  for (MetricKind kind : MetricsFor(args.metric)) {
    const EvaluationReport report = Evaluate(game, kind);
    const std::string name(MetricKindName(kind));
    json metric;
    metric["sink_equilibria"] = json::array();
    text << Upper(name) << " sink equilibria:";
    for (const auto& component : report.sink_equilibria.components) {
      metric["sink_equilibria"].push_back(LabelArray(game, component));
      text << " " << FormatStrategySet(game, component);
    }
    text << "\n";
    text << Upper(name) << " preferred: "
         << FormatStrategySet(game, report.preferred) << "\n";
    metric["preferred"] = LabelArray(game, report.preferred);
    metric["values"] = report.metric_values;
    doc["metrics"][name] = std::move(metric);

    if (!args.dot_prefix.empty()) {
      const bool best = kind == MetricKind::kBestDominating;
      const Digraph g =
          best ? BestResponseDigraph(game) : NonDominatedDigraph(game);
      DotOptions options;
      options.graph_name = best ? "best_response" : "non_dominated";
      options.omit_self_loops = args.omit_self_loops;
      const std::string path =
          args.dot_prefix + "_" + options.graph_name + ".dot";
      WriteFile(path, ToDot(g, report.sink_equilibria, options));
    }
  }

  if (args.json_output) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitSuccess;
}

std::string FrequencyCsv(const SymmetricGame& game,
                         const std::vector<double>& frequencies) {
  std::string csv = "strategy,frequency\n";
  char buffer[32];
  for (std::size_t s = 0; s < frequencies.size(); ++s) {
    std::snprintf(buffer, sizeof(buffer), "%.4f", frequencies[s]);
    csv += game.label(s) + "," + buffer + "\n";
  }
  return csv;
}

int SelfPlay(const SelfPlayArgs& args, std::ostream& out) {
  SelfPlayConfig config;
  config.tau_max = args.tau_max;
  config.memory_length = args.memory;
  config.seed = args.seed;
  ValidateConfig(config);
  const SymmetricGame game = LoadGame(args.game_file);
  const Variant variant =
      args.variant == "weak" ? Variant::kWeak : Variant::kStrict;
  BatchOptions options;
  options.threads = args.threads;
  const auto frequencies =
      BatchFrequencies(game, variant, config, args.runs, options);

  out << "variant: " << VariantName(variant) << ", runs: " << args.runs
      << ", tau_max: " << args.tau_max << ", memory: " << args.memory
      << ", seed: " << args.seed << "\n";
  std::size_t width = 8;
  for (const auto& label : game.labels()) width = std::max(width, label.size());
  char buffer[32];
  for (std::size_t s = 0; s < frequencies.size(); ++s) {
    std::snprintf(buffer, sizeof(buffer), "%.4f", frequencies[s]);
    const std::string& label = game.label(s);
    out << label << std::string(width - label.size() + 2, ' ') << buffer
        << "\n";
  }
  if (!args.csv_path.empty()) {
    const std::string csv = FrequencyCsv(game, frequencies);
    if (args.csv_path == "-") {
      out << csv;
    } else {
      WriteFile(args.csv_path, csv);
    }
  }
  return kExitSuccess;
}

int Verify(const VerifyArgs& args, std::ostream& out) {
  const SymmetricGame game = LoadGame(args.game_file);
  const TheoremReport report = CheckTheorems(game);
  out << report.ToJson().dump(2) << "\n";
  return report.AnyViolated() ? kExitViolation : kExitSuccess;
}

int Generate(const GenerateArgs& args, std::ostream& out) {
  GameFilter filter;
  for (const auto& name : args.filters) {
    if (name == "no-self-br") {
      filter.no_self_best_response = true;
    } else if (name == "no-mutual-br") {
      filter.no_mutual_best_response_pairs = true;
    } else if (name == "generic-br") {
      filter.generic_best_responses = true;
    }
  }
  if (!args.out_dir.empty()) std::filesystem::create_directories(args.out_dir);
  for (std::size_t i = 0; i < args.count; ++i) {
    const SymmetricGame game = RandomGame(args.n, args.low, args.high, filter,
                                          DeriveRunSeed(args.seed, i));
    if (!args.out_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof(name), "game_%04zu.json", i + 1);
      WriteFile((std::filesystem::path(args.out_dir) / name).string(),
                SerializeGame(game));
    } else if (args.count == 1) {
      out << SerializeGame(game);
    } else {
      out << GameToJson(game).dump() << "\n";
    }
  }
  return kExitSuccess;
}

int Metagame(const MetagameArgs& args, std::ostream& out) {
  const StochasticGame sg = ParseStochasticGameJson(ReadInput(args.stoch_file));
  const SymmetricGame game = BuildMetaGame(sg, args.cap);
  const std::string text = SerializeGame(game);
  if (args.out_path.empty() || args.out_path == "-") {
    out << text;
  } else {
    WriteFile(args.out_path, text);
  }
  return kExitSuccess;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Sink-equilibrium evaluation of symmetric two-player games",
               "sinkeval"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Sink equilibria and preferred sets");
  analyze_cmd->add_option("game", analyze.game_file, "Game file (.json, .csv or -)")
      ->required();
  analyze_cmd->add_option("--metric", analyze.metric, "bd, nd or both")
      ->check(CLI::IsMember({"bd", "nd", "both"}))
      ->capture_default_str();
  analyze_cmd->add_option(
      "--dot", analyze.dot_prefix,
      "Write <prefix>_best_response.dot / <prefix>_non_dominated.dot");
  analyze_cmd->add_flag("--json", analyze.json_output, "JSON report");
  analyze_cmd->add_flag("--omit-self-loops", analyze.omit_self_loops,
                        "Leave self-loops out of DOT output");

  SelfPlayArgs selfplay;
  auto* selfplay_cmd =
      app.add_subcommand("selfplay", "Batch self-play learnt-strategy frequencies");
  selfplay_cmd->add_option("game", selfplay.game_file, "Game file")->required();
  selfplay_cmd->add_option("--variant", selfplay.variant, "strict or weak")
      ->check(CLI::IsMember({"strict", "weak"}))
      ->capture_default_str();
  selfplay_cmd->add_option("--tau-max", selfplay.tau_max, "Episodes per run")
      ->capture_default_str();
  selfplay_cmd->add_option("--memory", selfplay.memory, "Memory length")
      ->capture_default_str();
  selfplay_cmd->add_option("--runs", selfplay.runs, "Independent runs")
      ->capture_default_str();
  selfplay_cmd->add_option("--seed", selfplay.seed, "Base seed")
      ->capture_default_str();
  selfplay_cmd->add_option("--csv", selfplay.csv_path,
                           "Write strategy,frequency CSV (- for stdout)");
  selfplay_cmd->add_option("--threads", selfplay.threads,
                           "Worker threads (0 = hardware)")
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check the structural claims on a game");
  verify_cmd->add_option("game", verify.game_file, "Game file")->required();

  GenerateArgs generate;
  auto* generate_cmd =
      app.add_subcommand("generate", "Random integer symmetric games");
  generate_cmd->add_option("--n", generate.n, "Number of strategies")
      ->required();
  generate_cmd->add_option("--low", generate.low, "Smallest payoff")
      ->capture_default_str();
  generate_cmd->add_option("--high", generate.high, "Largest payoff")
      ->capture_default_str();
  generate_cmd
      ->add_option("--filter", generate.filters,
                   "Comma separated: no-self-br, no-mutual-br, generic-br")
      ->delimiter(',')
      ->check(CLI::IsMember({"no-self-br", "no-mutual-br", "generic-br"}));
  generate_cmd->add_option("--seed", generate.seed, "Base seed")
      ->capture_default_str();
  generate_cmd->add_option("--count", generate.count, "Number of games")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate_cmd->add_option("--out-dir", generate.out_dir,
                           "Write game_NNNN.json files here");

  MetagameArgs metagame;
  auto* metagame_cmd = app.add_subcommand(
      "metagame", "Symmetric meta-game of a stochastic game");
  metagame_cmd->add_option("stoch", metagame.stoch_file,
                           "Stochastic game JSON (or -)")
      ->required();
  metagame_cmd->add_option("--out", metagame.out_path,
                           "Output game file (stdout if omitted)");
  metagame_cmd->add_option("--cap", metagame.cap, "Strategy count limit")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (*analyze_cmd) return Analyze(analyze, out);
    if (*selfplay_cmd) return SelfPlay(selfplay, out);
    if (*verify_cmd) return Verify(verify, out);
    if (*generate_cmd) return Generate(generate, out);
    if (*metagame_cmd) return Metagame(metagame, out);
  } catch (const SinkevalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sinkeval
