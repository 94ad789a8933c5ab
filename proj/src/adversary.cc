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

#include "mplus/adversary.h"

#include <algorithm>
#include <bit>
#include <string>

#include "mplus/error.h"

namespace mplus {
namespace {

std::string Name(const Graph& g, NodeId v) {
  return std::to_string(g.ident(v).value);
}

std::string EdgeName(const Graph& g, Edge e) {
  return "(" + Name(g, e.a) + "," + Name(g, e.b) + ")";
}

// Fires moves through the executor and records them in the report.
class ReportingFirer {
 public:
  ReportingFirer(ScriptedExecutor& exec, SwitchReport& report)
      : exec_(exec), report_(report) {}

  void operator()(NodeId v, RuleKind r) {
    exec_.Fire(v, r);
    report_.moves.push_back({v, r});
  }

  void Finish(Edge e) {
    const Graph& g = exec_.graph();
    auto& touched = report_.touched;
    for (const Move& m : report_.moves) touched.push_back(m.node);
    std::sort(touched.begin(), touched.end(),
              [&g](NodeId a, NodeId b) { return g.less(a, b); });
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    report_.achieved = ClassifyEdge(g, exec_.config(), e);
    report_.locally_off = LocallyOff(g, exec_.config(), e);
  }

 private:
  ScriptedExecutor& exec_;
  SwitchReport& report_;
};

bool HasProposerOtherThan(const Graph& g, const Configuration& c, NodeId x,
                          NodeId v, bool only_lower) {
  for (NodeId w : g.neighbors(x)) {
    if (w == v || c[w].p != x) continue;
    if (!only_lower || g.less(w, v)) return true;
  }
  return false;
}

}  // namespace

void ScriptedExecutor::Fire(NodeId v, RuleKind r) {
  if (!EnabledRules(g_, c_, v).contains(r)) {
    throw Error(ErrorCode::kRuleNotEnabled,
                std::string(RuleName(r)) + " at node " + Name(g_, v));
  }
  c_[v] = NextState(g_, c_, v, r);
  ++moves_;
  if (log_) log_->push_back({v, r});
}

SwitchReport SwitchOn(ScriptedExecutor& exec, Edge e) {
  const Graph& g = exec.graph();
  const Configuration& c = exec.config();
  const auto [v, u, x, y] = ResolveRoles(g, e);
  if (ClassifyEdge(g, c, e) != EdgeState::kOff) {
    throw Error(ErrorCode::kPreconditionViolated,
                "switch on: edge " + EdgeName(g, e) + " is not Off");
  }
  if (HasProposerOtherThan(g, c, x, v, /*only_lower=*/true)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "switch on: node " + Name(g, x) + " has a proposer below " +
                    Name(g, v));
  }

  SwitchReport report;
  ReportingFirer fire(exec, report);
  if (std::pair(c[u].alpha, c[u].beta) != std::pair<MaybeNode, MaybeNode>(y, std::nullopt)) {
    fire(u, RuleKind::kUpdate);
  }
  if (std::pair(c[v].alpha, c[v].beta) != std::pair<MaybeNode, MaybeNode>(x, std::nullopt)) {
    fire(v, RuleKind::kUpdate);
  }
  fire(v, RuleKind::kMatchFirst);
  fire(x, RuleKind::kSingleNode);
  fire(v, RuleKind::kMatchFirst);
  fire(u, RuleKind::kMatchSecond);
  fire.Finish(e);
  if (report.achieved != EdgeState::kOn) {
    throw Error(ErrorCode::kVerificationFailed,
                "switch on: edge " + EdgeName(g, e) + " ended " +
                    EdgeStateName(report.achieved));
  }
  return report;
}

std::pair<Configuration, SwitchReport> SwitchOn(const Graph& g,
                                                const Configuration& c, Edge e) {
  Configuration next = c;
  ScriptedExecutor exec(g, next);
  SwitchReport report = SwitchOn(exec, e);
  return {std::move(next), std::move(report)};
}

SwitchReport SwitchOff(ScriptedExecutor& exec, Edge e) {
  const Graph& g = exec.graph();
  const Configuration& c = exec.config();
  const auto [v, u, x, y] = ResolveRoles(g, e);
  if (ClassifyEdge(g, c, e) != EdgeState::kAlmostOn) {
    throw Error(ErrorCode::kPreconditionViolated,
                "switch off: edge " + EdgeName(g, e) + " is not Almost On");
  }
  if (!c[u].alpha && !c[u].beta) {
    throw Error(ErrorCode::kPreconditionViolated,
                "switch off: node " + Name(g, u) + " has no candidates to drop");
  }
  if (HasProposerOtherThan(g, c, x, v, /*only_lower=*/false)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "switch off: node " + Name(g, x) + " has another proposer");
  }

  SwitchReport report;
  ReportingFirer fire(exec, report);
  fire(u, RuleKind::kUpdate);
  fire(v, RuleKind::kResetMatch);
  fire(x, RuleKind::kSingleNode);
  fire.Finish(e);
  const LocalState& su = exec.config()[u];
  const LocalState& sv = exec.config()[v];
  if (!report.locally_off || su.s || sv.s || su.alpha || su.beta) {
    throw Error(ErrorCode::kVerificationFailed,
                "switch off: edge " + EdgeName(g, e) + " not locally off");
  }
  return report;
}

std::pair<Configuration, SwitchReport> SwitchOff(const Graph& g,
                                                 const Configuration& c, Edge e) {
  Configuration next = c;
  ScriptedExecutor exec(g, next);
  SwitchReport report = SwitchOff(exec, e);
  return {std::move(next), std::move(report)};
}

int PlusOne(const GnInstance& gn, ScriptedExecutor& exec,
            const PhaseObserver& observer) {
  const auto omega = DecodeOmega(gn, exec.config());
  if (!omega) {
    throw Error(ErrorCode::kPreconditionViolated,
                "configuration does not encode an integer");
  }
  const int n = gn.n_bits();
  if (*omega == (std::uint64_t{1} << n) - 1) {
    throw Error(ErrorCode::kAtMaximum, "omega = " + std::to_string(*omega));
  }
  auto notify = [&](PlusOnePhase phase) {
    if (observer) observer(phase, exec.config());
  };

  const int i = std::countr_one(*omega);
  if (i == 0) {
    SwitchOn(exec, gn.bit_edge(0));
    notify(PlusOnePhase::kTargetBitOn);
    return 0;
  }
  for (int j = 0; j < i; ++j) SwitchOn(exec, gn.r_edge(i, j));
  notify(PlusOnePhase::kSquaresOn);
  for (int j = 0; j < i; ++j) SwitchOff(exec, gn.bit_edge(j));
  notify(PlusOnePhase::kLowBitsOff);
  SwitchOn(exec, gn.bit_edge(i));
  notify(PlusOnePhase::kTargetBitOn);
  for (int j = 0; j < i; ++j) SwitchOff(exec, gn.r_edge(i, j));
  notify(PlusOnePhase::kSquaresOff);
  return i;
}

std::pair<Configuration, std::vector<Move>> PlusOne(const GnInstance& gn,
                                                    const Configuration& c) {
  Configuration next = c;
  std::vector<Move> log;
  ScriptedExecutor exec(gn.graph(), next);
  exec.set_log(&log);
  PlusOne(gn, exec);
  return {std::move(next), std::move(log)};
}

bool CountReport::all_verified() const {
  return !omega_verified.empty() &&
         std::all_of(omega_verified.begin(), omega_verified.end(),
                     [](bool b) { return b; });
}

CountReport CountAll(int n, const CountOptions& options) {
  if (n < 1 || n > kMaxCountBits) {
    throw Error(ErrorCode::kInvalidN,
                "count needs 1 <= N <= " + std::to_string(kMaxCountBits));
  }
  const GnInstance gn = BuildGn(n);
  const Graph& g = gn.graph();
  Configuration c = ZeroConfiguration(gn);
  const Configuration initial = c;

  std::vector<Move> log;
  ScriptedExecutor exec(g, c);
  if (options.record_trace) exec.set_log(&log);

  CountReport report;
  report.n_bits = n;
  const std::uint64_t limit = std::uint64_t{1} << n;
  report.omega_verified.assign(limit, false);
  if (DecodeOmega(gn, c) != 0u) {
    throw Error(ErrorCode::kVerificationFailed, "omega = 0");
  }
  report.omega_verified[0] = true;

  for (std::uint64_t expected = 1; expected < limit; ++expected) {
    const std::uint64_t before = exec.move_count();
    const int carry = PlusOne(gn, exec);
    const std::uint64_t used = exec.move_count() - before;
    if (used > IncrementMoveBound(carry)) {
      throw Error(ErrorCode::kVerificationFailed,
                  "omega = " + std::to_string(expected) + ": " +
                      std::to_string(used) + " moves exceed the bound");
    }
    report.max_increment_moves = std::max(report.max_increment_moves, used);
    if (DecodeOmega(gn, c) != expected) {
      throw Error(ErrorCode::kVerificationFailed,
                  "omega = " + std::to_string(expected));
    }
    report.omega_verified[expected] = true;
  }
  report.total_moves = exec.move_count();

  Trace fair;
  if (options.fair_finish) {
    RunOptions run;
    run.max_moves = options.fair_max_moves;
    run.record_steps = options.record_trace;
    fair = Run(g, c, DaemonStrategy::RoundRobinFair(), run);
    report.terminal_stable_after_fair_run = fair.stabilized;
    report.fair_finish_moves = fair.move_count;
    c = fair.final_config;
  }

  if (options.record_trace) {
    Trace trace;
    trace.initial = initial;
    trace.steps.reserve(log.size() + fair.steps.size());
    for (const Move& m : log) trace.steps.push_back({m});
    for (auto& step : fair.steps) trace.steps.push_back(std::move(step));
    trace.move_count = report.total_moves + report.fair_finish_moves;
    trace.stabilized = IsStable(g, c);
    trace.final_config = c;
    report.trace = std::move(trace);
  }
  return report;
}

}  // namespace mplus
