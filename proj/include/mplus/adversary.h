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

#ifndef MPLUS_ADVERSARY_H_
#define MPLUS_ADVERSARY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mplus/engine.h"
#include "mplus/gn.h"
#include "mplus/graph.h"
#include "mplus/rules.h"

namespace mplus {

// Applies hand-picked moves one at a time, in place. Each move is checked
// against the guards first; a disabled move throws RuleNotEnabled.
class ScriptedExecutor {
 public:
  ScriptedExecutor(const Graph& g, Configuration& c) : g_(g), c_(c) {}

  void Fire(NodeId v, RuleKind r);

  const Graph& graph() const { return g_; }
  const Configuration& config() const { return c_; }
  std::uint64_t move_count() const { return moves_; }
  // Every fired move is appended here when set.
  void set_log(std::vector<Move>* log) { log_ = log; }

 private:
  const Graph& g_;
  Configuration& c_;
  std::vector<Move>* log_ = nullptr;
  std::uint64_t moves_ = 0;
};

struct SwitchReport {
  std::vector<Move> moves;
  // Nodes that moved, ascending identifier order, no repeats.
  std::vector<NodeId> touched;
  EdgeState achieved = EdgeState::kOther;
  bool locally_off = false;
};

// Off -> On. Moves, skipping the Updates whose alpha/beta are already right:
//   Update u, Update v, MatchFirst v, SingleNode x, MatchFirst v, MatchSecond u.
// The second MatchFirst refreshes s_v once x has accepted v; MatchSecond at u
// is gated on it. Requires: the edge is Off, its endpoints each have a single
// neighbor, and no proposer of x has a lower identifier than v.
SwitchReport SwitchOn(ScriptedExecutor& exec, Edge e);
std::pair<Configuration, SwitchReport> SwitchOn(const Graph& g,
                                                const Configuration& c, Edge e);

// Almost On -> locally off via Update u, ResetMatch v, SingleNode x.
// alpha_v keeps x: BestRematch(v) is (x, null) throughout, so v's Update is
// never enabled. Requires: the edge is Almost On, (alpha_u, beta_u) is not
// (null, null), and v is the only proposer of x.
SwitchReport SwitchOff(ScriptedExecutor& exec, Edge e);
std::pair<Configuration, SwitchReport> SwitchOff(const Graph& g,
                                                 const Configuration& c, Edge e);

// Phase boundaries of one increment, for observers.
enum class PlusOnePhase {
  kSquaresOn = 1,
  kLowBitsOff = 2,
  kTargetBitOn = 3,
  kSquaresOff = 4,
};

using PhaseObserver = std::function<void(PlusOnePhase, const Configuration&)>;

// omega -> omega + 1. With i the lowest zero bit of omega:
//   i = 0: switch bit 0 on.
//   i > 0: (1) r-edges (i,j) on, (2) bit edges j off, (3) bit edge i on,
//          (4) r-edges (i,j) off, each for j = 0..i-1 ascending.
// Throws AtMaximum, PreconditionViolated (c is not an omega-configuration)
// and whatever the switches throw. Returns the carry length i.
int PlusOne(const GnInstance& gn, ScriptedExecutor& exec,
            const PhaseObserver& observer = nullptr);
std::pair<Configuration, std::vector<Move>> PlusOne(const GnInstance& gn,
                                                    const Configuration& c);

// Upper bound on the moves of one increment with carry length i.
constexpr std::uint64_t IncrementMoveBound(int carry) {
  return 6 * (2 * static_cast<std::uint64_t>(carry) + 1);
}

struct CountOptions {
  bool record_trace = false;
  bool fair_finish = false;
  std::uint64_t fair_max_moves = kDefaultMaxMoves;
};

struct CountReport {
  int n_bits = 0;
  std::uint64_t total_moves = 0;
  // omega_verified[w] is set once the w-configuration was decoded as w.
  std::vector<bool> omega_verified;
  std::optional<bool> terminal_stable_after_fair_run;
  std::uint64_t fair_finish_moves = 0;
  std::uint64_t max_increment_moves = 0;
  std::optional<Trace> trace;

  bool all_verified() const;
};

inline constexpr int kMaxCountBits = 24;

// Counts from the 0-configuration to 2^N - 1 with PlusOne, decoding after
// every increment (VerificationFailed on mismatch or when an increment
// exceeds IncrementMoveBound).
CountReport CountAll(int n, const CountOptions& options = {});

}  // namespace mplus

#endif  // MPLUS_ADVERSARY_H_
