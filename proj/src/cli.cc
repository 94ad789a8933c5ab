// Copyright 2026 The mplus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mplus/cli.h"

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mplus/adversary.h"
#include "mplus/engine.h"
#include "mplus/error.h"
#include "mplus/figure2.h"
#include "mplus/generators.h"
#include "mplus/gn.h"
#include "mplus/io.h"
#include "mplus/oracle.h"

namespace mplus {
namespace {

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct GnFlags {
  int n = 0;
  std::string dot;
  std::string json;
};

struct CountFlags {
  int n = 0;
  std::string trace;
  bool fair_finish = false;
  std::string pin;
};

struct ReplayFlags {
  std::string dot_dir;
};

struct StabilizeFlags {
  std::string graph;
  std::string config;
  std::optional<std::uint64_t> random_seed;
  std::string daemon = "random-central";
  std::uint64_t seed = 0;
  double p = 0.5;
  std::uint64_t max_moves = kDefaultMaxMoves;
  std::string trace;
};

struct VerifyFlags {
  std::string graph;
  std::string config;
};

int RunGn(const GnFlags& f, std::ostream& out) {
  const GnInstance gn = BuildGn(f.n);
  const Json graph = GraphToJson(gn.graph());
  if (!f.json.empty()) WriteTextFile(f.json, graph.dump(2) + "\n");
  if (!f.dot.empty()) {
    WriteTextFile(f.dot, ExportDot(gn.graph(), ZeroConfiguration(gn)));
  }
  Emit(out, graph);
  return 0;
}

// Pinned totals are stored as {"total_moves": {"<N>": <moves>, ...}}.
std::optional<std::uint64_t> PinnedTotal(const std::string& path, int n) {
  const Json pins = ReadJsonFile(path);
  const auto key = std::to_string(n);
  if (!pins.contains("total_moves") || !pins["total_moves"].contains(key)) {
    return std::nullopt;
  }
  return pins["total_moves"][key].get<std::uint64_t>();
}

int RunCount(const CountFlags& f, std::ostream& out) {
  CountOptions options;
  options.record_trace = !f.trace.empty();
  options.fair_finish = f.fair_finish;
  const CountReport report = CountAll(f.n, options);

  Json j;
  j["n"] = f.n;
  j["total_moves"] = report.total_moves;
  j["verified"] = report.all_verified();
  j["nodes"] = f.n * f.n + 3 * f.n;
  j["max_increment_moves"] = report.max_increment_moves;
  int status = report.all_verified() ? 0 : 1;
  if (report.terminal_stable_after_fair_run) {
    j["terminal_stable"] = *report.terminal_stable_after_fair_run;
    j["fair_finish_moves"] = report.fair_finish_moves;
  }
  if (!f.pin.empty()) {
    const auto pinned = PinnedTotal(f.pin, f.n);
    if (pinned) {
      j["pinned_total_moves"] = *pinned;
      j["pin_matches"] = *pinned == report.total_moves;
      if (*pinned != report.total_moves) status = 1;
    } else {
      j["pinned_total_moves"] = nullptr;
    }
  }
  if (report.trace) {
    const GnInstance gn = BuildGn(f.n);
    WriteTextFile(f.trace, TraceToJson(gn.graph(), *report.trace).dump() + "\n");
  }
  Emit(out, j);
  return status;
}

int RunReplay(const ReplayFlags& f, std::ostream& out) {
  const Figure2Fixture fixture = MakeFigure2Fixture();
  const Figure2Report report = ReplayFigure2(fixture);
  const Graph& g = fixture.graph;
  const auto frames = Figure2ExpectedFrames();

  if (!f.dot_dir.empty()) {
    std::filesystem::create_directories(f.dot_dir);
    const std::filesystem::path dir(f.dot_dir);
    WriteTextFile((dir / "step00_a.dot").string(), ExportDot(g, fixture.initial));
    for (std::size_t k = 0; k < report.snapshots.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof(name), "step%02zu_%s.dot", k + 1,
                    frames[k].label.c_str());
      WriteTextFile((dir / name).string(), ExportDot(g, report.snapshots[k]));
    }
  }

  Json steps = Json::array();
  for (std::size_t k = 0; k < report.trace.steps.size(); ++k) {
    const Move& m = report.trace.steps[k].front();
    steps.push_back({{"node", g.ident(m.node).value},
                     {"rule", RuleName(m.rule)},
                     {"figure", frames[k].label}});
  }
  Json j;
  j["moves"] = report.moves;
  j["stabilized"] = report.stabilized;
  j["matching"] = EdgesToJson(g, report.matching);
  j["matching_size"] = report.matching.size();
  j["maximum_size"] = report.maximum_size;
  j["steps"] = std::move(steps);
  Emit(out, j);
  return 0;
}

DaemonStrategy ParseDaemon(const StabilizeFlags& f) {
  if (f.daemon == "random-central") return DaemonStrategy::RandomCentral(f.seed);
  if (f.daemon == "round-robin") return DaemonStrategy::RoundRobinFair();
  if (f.daemon == "synchronous") return DaemonStrategy::Synchronous();
  if (f.daemon == "random-distributed") {
    return DaemonStrategy::RandomDistributed(f.seed, f.p);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown daemon '" + f.daemon + "'");
}

int RunStabilize(const StabilizeFlags& f, std::ostream& out) {
  const Graph g = GraphFromJson(ReadJsonFile(f.graph));
  Configuration c0(g.size());
  if (!f.config.empty()) {
    c0 = ConfigFromJson(g, ReadJsonFile(f.config));
  } else if (f.random_seed) {
    Rng rng(*f.random_seed);
    c0 = RandomConfiguration(g, rng);
  }
  RunOptions options;
  options.max_moves = f.max_moves;
  options.record_steps = !f.trace.empty();
  const Trace trace = Run(g, c0, ParseDaemon(f), options);
  if (!f.trace.empty()) WriteTextFile(f.trace, TraceToJson(g, trace).dump() + "\n");

  Json j;
  j["stabilized"] = trace.stabilized;
  j["move_count"] = trace.move_count;
  j["matching"] = EdgesToJson(g, ExtractMatching(g, trace.final_config));
  j["final"] = ConfigToJson(g, trace.final_config);
  bool ok = trace.stabilized;
  if (trace.stabilized && g.edge_count() <= kMaxOracleEdges) {
    const auto report = VerifyStable(g, trace.final_config);
    j["verification"] = VerificationToJson(report);
    ok = ok && report.passed();
  }
  Emit(out, j);
  return ok ? 0 : 1;
}

int RunVerify(const VerifyFlags& f, std::ostream& out) {
  const Graph g = GraphFromJson(ReadJsonFile(f.graph));
  const Configuration c = ConfigFromJson(g, ReadJsonFile(f.config));
  const auto report = VerifyStable(g, c);
  Emit(out, VerificationToJson(report));
  return report.passed() ? 0 : 1;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Simulator and verifier for the M+ 2/3-approximation matching algorithm"};
  app.name("mplus");
  app.require_subcommand(1);

  GnFlags gn;
  auto* gn_cmd = app.add_subcommand("gn", "Emit the counter gadget graph G_N");
  gn_cmd->add_option("--n", gn.n, "Number of bits")->required()->check(CLI::Range(1, 62));
  gn_cmd->add_option("--dot", gn.dot, "Write DOT of the 0-configuration");
  gn_cmd->add_option("--json", gn.json, "Also write the graph JSON to a file");

  CountFlags count;
  auto* count_cmd = app.add_subcommand("count", "Count 0 .. 2^N-1 on G_N with the adversarial schedule");
  count_cmd->add_option("--n", count.n, "Number of bits")
      ->required()->check(CLI::Range(1, kMaxCountBits));
  count_cmd->add_option("--trace", count.trace, "Write the full trace JSON");
  count_cmd->add_flag("--fair-finish", count.fair_finish,
                      "Continue with a round-robin daemon until stable");
  count_cmd->add_option("--pin", count.pin, "Regression constants JSON to compare against");

  ReplayFlags replay;
  auto* replay_cmd = app.add_subcommand("replay-figure2", "Replay the 7-node worked example");
  replay_cmd->add_option("--dot-dir", replay.dot_dir, "Write one DOT file per step");

  StabilizeFlags stab;
  auto* stab_cmd = app.add_subcommand("stabilize", "Run a daemon until the configuration is stable");
  stab_cmd->add_option("--graph", stab.graph, "Graph JSON")->required();
  auto* config_opt = stab_cmd->add_option("--config", stab.config, "Initial configuration JSON");
  stab_cmd->add_option("--random-seed", stab.random_seed, "Draw a random initial configuration")
      ->excludes(config_opt);
  stab_cmd->add_option("--daemon", stab.daemon, "Scheduling strategy")
      ->check(CLI::IsMember({"random-central", "round-robin", "synchronous",
                             "random-distributed"}));
  stab_cmd->add_option("--seed", stab.seed, "Seed of the random daemons");
  stab_cmd->add_option("--p", stab.p, "Activation probability (random-distributed)");
  stab_cmd->add_option("--max-moves", stab.max_moves, "Move budget")
      ->check(CLI::PositiveNumber);
  stab_cmd->add_option("--trace", stab.trace, "Write the trace JSON");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a stable configuration with the oracles");
  verify_cmd->add_option("--graph", verify.graph, "Graph JSON")->required();
  verify_cmd->add_option("--config", verify.config, "Configuration JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gn_cmd->parsed()) return RunGn(gn, out);
    if (count_cmd->parsed()) return RunCount(count, out);
    if (replay_cmd->parsed()) return RunReplay(replay, out);
    if (stab_cmd->parsed()) return RunStabilize(stab, out);
    if (verify_cmd->parsed()) return RunVerify(verify, out);
  } catch (const Error& e) {
    Json j;
    j["error"] = ErrorCodeName(e.code());
    j["message"] = e.what();
    Emit(out, j);
    err << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace mplus
