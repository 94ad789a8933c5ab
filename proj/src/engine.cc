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

#include "mplus/engine.h"

#include <string>
#include <utility>

#include "mplus/error.h"

namespace mplus {
namespace {

std::vector<NodeId> EnabledNodes(const Graph& g,
                                 std::span<const RuleSet> enabled) {
  std::vector<NodeId> out;
  for (NodeId v : g.by_ident()) {
    if (!enabled[v.index].empty()) out.push_back(v);
  }
  return out;
}

RuleKind RandomRule(RuleSet rules, Rng& rng) {
  const auto list = rules.to_vector();
  return list[rng.Below(list.size())];
}

class ScriptedDaemon : public Daemon {
 public:
  explicit ScriptedDaemon(std::vector<Move> script) : script_(std::move(script)) {}

  std::optional<MoveSet> Select(const Graph&, std::span<const RuleSet>) override {
    if (next_ >= script_.size()) return std::nullopt;
    return MoveSet{script_[next_++]};
  }

 private:
  std::vector<Move> script_;
  std::size_t next_ = 0;
};

class RandomCentralDaemon : public Daemon {
 public:
  explicit RandomCentralDaemon(std::uint64_t seed) : rng_(seed) {}

  std::optional<MoveSet> Select(const Graph& g,
                                std::span<const RuleSet> enabled) override {
    const auto nodes = EnabledNodes(g, enabled);
    const NodeId v = nodes[rng_.Below(nodes.size())];
    return MoveSet{{v, RandomRule(enabled[v.index], rng_)}};
  }

 private:
  Rng rng_;
};

// Walks the nodes in ascending identifier order, resuming after the node
// that moved last, so every enabled node moves within one sweep.
class RoundRobinDaemon : public Daemon {
 public:
  std::optional<MoveSet> Select(const Graph& g,
                                std::span<const RuleSet> enabled) override {
    const auto& order = g.by_ident();
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t pos = (cursor_ + k) % order.size();
      const NodeId v = order[pos];
      if (enabled[v.index].empty()) continue;
      cursor_ = pos + 1;
      return MoveSet{{v, PriorityRule(enabled[v.index])}};
    }
    return std::nullopt;
  }

 private:
  std::size_t cursor_ = 0;
};

class SynchronousDaemon : public Daemon {
 public:
  std::optional<MoveSet> Select(const Graph& g,
                                std::span<const RuleSet> enabled) override {
    MoveSet out;
    for (NodeId v : EnabledNodes(g, enabled)) {
      out.push_back({v, PriorityRule(enabled[v.index])});
    }
    return out;
  }
};

class RandomDistributedDaemon : public Daemon {
 public:
  RandomDistributedDaemon(std::uint64_t seed, double p) : rng_(seed), p_(p) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "activation probability must be in (0, 1]");
    }
  }

  std::optional<MoveSet> Select(const Graph& g,
                                std::span<const RuleSet> enabled) override {
    const auto nodes = EnabledNodes(g, enabled);
    for (;;) {
      MoveSet out;
      for (NodeId v : nodes) {
        if (rng_.Bernoulli(p_)) out.push_back({v, RandomRule(enabled[v.index], rng_)});
      }
      if (!out.empty()) return out;
    }
  }

 private:
  Rng rng_;
  double p_;
};

}  // namespace

DaemonStrategy DaemonStrategy::Scripted(std::vector<Move> moves) {
  DaemonStrategy d;
  d.kind = Kind::kScriptedCentral;
  d.script = std::move(moves);
  return d;
}

DaemonStrategy DaemonStrategy::RandomCentral(std::uint64_t seed) {
  DaemonStrategy d;
  d.kind = Kind::kRandomCentral;
  d.seed = seed;
  return d;
}

DaemonStrategy DaemonStrategy::RoundRobinFair() { return DaemonStrategy{}; }

DaemonStrategy DaemonStrategy::Synchronous() {
  DaemonStrategy d;
  d.kind = Kind::kSynchronous;
  return d;
}

DaemonStrategy DaemonStrategy::RandomDistributed(std::uint64_t seed, double p) {
  DaemonStrategy d;
  d.kind = Kind::kRandomDistributed;
  d.seed = seed;
  d.activation_probability = p;
  return d;
}

std::unique_ptr<Daemon> MakeDaemon(const DaemonStrategy& strategy) {
  using Kind = DaemonStrategy::Kind;
  switch (strategy.kind) {
    case Kind::kScriptedCentral:
      return std::make_unique<ScriptedDaemon>(strategy.script);
    case Kind::kRandomCentral:
      return std::make_unique<RandomCentralDaemon>(strategy.seed);
    case Kind::kRoundRobinFair:
      return std::make_unique<RoundRobinDaemon>();
    case Kind::kSynchronous:
      return std::make_unique<SynchronousDaemon>();
    case Kind::kRandomDistributed:
      return std::make_unique<RandomDistributedDaemon>(
          strategy.seed, strategy.activation_probability);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown daemon kind");
}

RuleKind PriorityRule(RuleSet rules) {
  for (RuleKind r : {RuleKind::kUpdate, RuleKind::kResetMatch,
                     RuleKind::kMatchFirst, RuleKind::kMatchSecond,
                     RuleKind::kSingleNode}) {
    if (rules.contains(r)) return r;
  }
  throw Error(ErrorCode::kInvalidArgument, "empty rule set");
}

Configuration ApplyStep(const Graph& g, const Configuration& c,
                        std::span<const Move> moves) {
  if (moves.empty()) throw Error(ErrorCode::kEmptyStep, "no moves in step");
  std::vector<bool> seen(g.size(), false);
  std::vector<LocalState> updates;
  updates.reserve(moves.size());
  for (const Move& m : moves) {
    if (!g.contains(m.node)) {
      throw Error(ErrorCode::kUnknownNode, "index " + std::to_string(m.node.index));
    }
    const std::string where = std::string(RuleName(m.rule)) + " at node " +
                              std::to_string(g.ident(m.node).value);
    if (seen[m.node.index]) throw Error(ErrorCode::kDuplicateNode, where);
    seen[m.node.index] = true;
    if (!EnabledRules(g, c, m.node).contains(m.rule)) {
      throw Error(ErrorCode::kRuleNotEnabled, where);
    }
    updates.push_back(NextState(g, c, m.node, m.rule));
  }
  Configuration next = c;
  for (std::size_t i = 0; i < moves.size(); ++i) next[moves[i].node] = updates[i];
  return next;
}

bool IsStable(const Graph& g, const Configuration& c) {
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (!EnabledRules(g, c, NodeId{i}).empty()) return false;
  }
  return true;
}

Trace Run(const Graph& g, const Configuration& c0, const DaemonStrategy& d,
          const RunOptions& options) {
  if (options.max_moves == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_moves must be positive");
  }
  auto daemon = MakeDaemon(d);
  Trace trace;
  trace.initial = c0;
  Configuration c = c0;

  // Guards read only the closed neighborhood, so after a step only the
  // movers and their neighbors need re-evaluation.
  std::vector<RuleSet> enabled(g.size());
  std::size_t enabled_count = 0;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    enabled[i] = EnabledRules(g, c, NodeId{i});
    if (!enabled[i].empty()) ++enabled_count;
  }
  auto refresh = [&](NodeId v) {
    const bool was = !enabled[v.index].empty();
    enabled[v.index] = EnabledRules(g, c, v);
    const bool now = !enabled[v.index].empty();
    if (was && !now) --enabled_count;
    if (!was && now) ++enabled_count;
  };

  while (enabled_count > 0) {
    auto moves = daemon->Select(g, enabled);
    if (!moves) break;
    if (trace.move_count + moves->size() > options.max_moves) break;
    c = ApplyStep(g, c, *moves);
    trace.move_count += moves->size();
    for (const Move& m : *moves) {
      refresh(m.node);
      for (NodeId w : g.neighbors(m.node)) refresh(w);
    }
    if (options.record_steps) trace.steps.push_back(std::move(*moves));
  }
  trace.stabilized = enabled_count == 0;
  trace.final_config = std::move(c);
  return trace;
}

Configuration Replay(const Graph& g, const Trace& trace) {
  Configuration c = trace.initial;
  for (const MoveSet& step : trace.steps) c = ApplyStep(g, c, step);
  return c;
}

}  // namespace mplus
