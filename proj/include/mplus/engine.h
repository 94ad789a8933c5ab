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

#ifndef MPLUS_ENGINE_H_
#define MPLUS_ENGINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mplus/graph.h"
#include "mplus/rng.h"
#include "mplus/rules.h"

namespace mplus {

struct Move {
  NodeId node;
  RuleKind rule;

  friend bool operator==(const Move&, const Move&) = default;
};

// Moves executed together in one transition, at most one per node.
using MoveSet = std::vector<Move>;

struct Trace {
  Configuration initial;
  std::vector<MoveSet> steps;
  std::uint64_t move_count = 0;
  bool stabilized = false;
  // Configuration reached after the last step; not part of the serialized
  // form (it is recomputable from initial + steps).
  Configuration final_config;
};

struct DaemonStrategy {
  enum class Kind {
    kScriptedCentral,
    kRandomCentral,
    kRoundRobinFair,
    kSynchronous,
    kRandomDistributed,
  };

  Kind kind = Kind::kRoundRobinFair;
  std::uint64_t seed = 0;
  double activation_probability = 0.5;
  std::vector<Move> script;

  static DaemonStrategy Scripted(std::vector<Move> moves);
  static DaemonStrategy RandomCentral(std::uint64_t seed);
  static DaemonStrategy RoundRobinFair();
  static DaemonStrategy Synchronous();
  static DaemonStrategy RandomDistributed(std::uint64_t seed, double p);
};

// Chooses the next move set given the enabled rules of every node. Returns
// nullopt when the daemon has nothing more to schedule (an exhausted script).
// Only called while at least one node is enabled.
class Daemon {
 public:
  virtual ~Daemon() = default;
  virtual std::optional<MoveSet> Select(const Graph& g,
                                        std::span<const RuleSet> enabled) = 0;
};

std::unique_ptr<Daemon> MakeDaemon(const DaemonStrategy& strategy);

// Rule picked when a deterministic daemon finds several enabled rules:
// Update > ResetMatch > MatchFirst > MatchSecond > SingleNode.
RuleKind PriorityRule(RuleSet rules);

// Applies every move against the single pre-step snapshot c.
// Throws EmptyStep, DuplicateNode, UnknownNode or RuleNotEnabled.
Configuration ApplyStep(const Graph& g, const Configuration& c,
                        std::span<const Move> moves);

bool IsStable(const Graph& g, const Configuration& c);

inline constexpr std::uint64_t kDefaultMaxMoves = 100'000'000;

struct RunOptions {
  std::uint64_t max_moves = kDefaultMaxMoves;
  bool record_steps = true;
};

// Drives the daemon until no node is enabled (stabilized = true), the move
// budget would be exceeded, or the daemon stops scheduling.
Trace Run(const Graph& g, const Configuration& c0, const DaemonStrategy& d,
          const RunOptions& options = {});

// Re-applies trace.steps from trace.initial.
Configuration Replay(const Graph& g, const Trace& trace);

}  // namespace mplus

#endif  // MPLUS_ENGINE_H_
