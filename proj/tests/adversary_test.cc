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

#include <gtest/gtest.h>

#include "mplus/engine.h"
#include "mplus/error.h"
#include "mplus/figure2.h"
#include "switch_harness.h"
#include "test_util.h"

namespace mplus {
namespace {

using testing::E;
using testing::N;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Move count of the full 0 -> 2^N - 1 run, from how often each edge switches.
// Bit i is turned on 2^(N-1-i) times, each time with carry i, which also
// turns r-edges (i,j) on and off and bits j < i off. A first switch-on costs
// 6 moves, a repeat 5 (alpha_u was cleared by the last switch-off, alpha_v
// kept), and a switch-off 3.
std::uint64_t ClosedFormTotal(int n) {
  std::uint64_t total = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t times = std::uint64_t{1} << (n - 1 - i);
    const std::uint64_t on_cost = 5 * times + 1;
    total += on_cost * (1 + i) + 6 * static_cast<std::uint64_t>(i) * times;
  }
  return total;
}

TEST(SwitchOnTest, Figure2Edge) {
  const auto fx = MakeFigure2Fixture();
  const Graph& g = fx.graph;
  auto [c, report] = SwitchOn(g, fx.initial, E(g, 24, 2));
  const std::vector<Move> want = {
      {N(g, 24), RuleKind::kUpdate},    {N(g, 2), RuleKind::kUpdate},
      {N(g, 2), RuleKind::kMatchFirst}, {N(g, 10), RuleKind::kSingleNode},
      {N(g, 2), RuleKind::kMatchFirst}, {N(g, 24), RuleKind::kMatchSecond}};
  EXPECT_EQ(report.moves, want);
  EXPECT_EQ(report.achieved, EdgeState::kOn);
  EXPECT_EQ(report.touched, (std::vector<NodeId>{N(g, 2), N(g, 10), N(g, 24)}));
  EXPECT_TRUE(c[N(g, 2)].s);
  EXPECT_EQ(c[N(g, 24)].p, N(g, 15));
}

TEST(SwitchOffTest, Figure2Edge) {
  const auto fx = MakeFigure2Fixture();
  const Graph& g = fx.graph;
  const Figure2Report r = ReplayFigure2(fx);
  const Configuration e_state = r.snapshots[6];
  auto [c, report] = SwitchOff(g, e_state, E(g, 9, 8));
  const std::vector<Move> want = {{N(g, 9), RuleKind::kUpdate},
                                  {N(g, 8), RuleKind::kResetMatch},
                                  {N(g, 7), RuleKind::kSingleNode}};
  EXPECT_EQ(report.moves, want);
  EXPECT_TRUE(report.locally_off);
  EXPECT_EQ(PointersOf(g, c), Figure2Pointers('h'));
  EXPECT_TRUE(IsStable(g, c));
  // Intermediate frames (f) and (g).
  Configuration step = e_state;
  step = ApplyRule(g, step, N(g, 9), RuleKind::kUpdate);
  EXPECT_EQ(PointersOf(g, step), Figure2Pointers('f'));
  step = ApplyRule(g, step, N(g, 8), RuleKind::kResetMatch);
  EXPECT_EQ(PointersOf(g, step), Figure2Pointers('g'));
}

TEST(SwitchTest, Preconditions) {
  const GnInstance gn = BuildGn(4);
  const Graph& g = gn.graph();
  const Configuration zero = ZeroConfiguration(gn);
  EXPECT_EQ(CodeOf([&] { SwitchOff(g, zero, gn.bit_edge(0)); }),
            ErrorCode::kPreconditionViolated);
  const Configuration on = SwitchOn(g, zero, gn.bit_edge(0)).first;
  EXPECT_EQ(CodeOf([&] { SwitchOn(g, on, gn.bit_edge(0)); }),
            ErrorCode::kPreconditionViolated);
  // A proposer of x below v blocks the switch.
  Configuration c = zero;
  const Edge r = gn.r_edge(2, 0);  // x = b(0,4), v = r2(2,0)
  EXPECT_EQ(ResolveRoles(g, r).x, gn.b(0, 4));
  c[gn.r2(1, 0)].p = gn.b(0, 4);  // identifier 1 < identifier of r2(2,0)
  EXPECT_EQ(CodeOf([&] { SwitchOn(g, c, r); }), ErrorCode::kPreconditionViolated);
}

TEST(SwitchOnTest, BitZeroFirstAndRepeatCost) {
  const GnInstance gn = BuildGn(4);
  Configuration c = ZeroConfiguration(gn);
  auto [one, moves01] = PlusOne(gn, c);
  EXPECT_EQ(moves01.size(), 6u);
  auto [two, moves12] = PlusOne(gn, one);
  auto [three, moves23] = PlusOne(gn, two);
  // The last switch-off cleared alpha_u; only v's Update is skipped.
  EXPECT_EQ(moves23.size(), 5u);
  EXPECT_EQ(DecodeOmega(gn, three), 3u);
}

TEST(PlusOneTest, FromFigureEncoding2) {
  const GnInstance gn = BuildGn(4);
  const Configuration c = testing::G4Figure(gn, "0010");
  auto [next, moves] = PlusOne(gn, c);
  EXPECT_EQ(DecodeOmega(gn, next), 3u);
  EXPECT_EQ(moves.size(), 6u);
  EXPECT_EQ(PointersOf(gn.graph(), next), testing::G4FigurePointers("0011"));
}

TEST(PlusOneTest, CarryPhasesMatchFigures) {
  const GnInstance gn = BuildGn(4);
  const Graph& g = gn.graph();
  Configuration c = ZeroConfiguration(gn);
  for (int k = 0; k < 3; ++k) c = PlusOne(gn, c).first;
  EXPECT_EQ(PointersOf(g, c), testing::G4FigurePointers("0011"));
  std::vector<std::pair<PlusOnePhase, PointerMap>> seen;
  ScriptedExecutor exec(g, c);
  const int carry = PlusOne(gn, exec, [&](PlusOnePhase p, const Configuration& snap) {
    seen.emplace_back(p, PointersOf(g, snap));
  });
  EXPECT_EQ(carry, 2);
  ASSERT_EQ(seen.size(), 4u);
  EXPECT_EQ(seen[0].first, PlusOnePhase::kSquaresOn);
  EXPECT_EQ(seen[0].second, testing::G4FigurePointers("011-1"));
  EXPECT_EQ(seen[1].second, testing::G4FigurePointers("011-2"));
  EXPECT_EQ(seen[2].second, testing::G4FigurePointers("011-3"));
  EXPECT_EQ(seen[3].second, testing::G4FigurePointers("0100"));
  EXPECT_EQ(DecodeOmega(gn, c), 4u);
  EXPECT_LE(exec.move_count(), IncrementMoveBound(2));
}

TEST(PlusOneTest, Errors) {
  const GnInstance gn = BuildGn(4);
  Configuration c = ZeroConfiguration(gn);
  for (int k = 0; k < 15; ++k) c = PlusOne(gn, c).first;
  EXPECT_EQ(DecodeOmega(gn, c), 15u);
  EXPECT_EQ(CodeOf([&] { PlusOne(gn, c); }), ErrorCode::kAtMaximum);
  EXPECT_EQ(CodeOf([&] { PlusOne(gn, testing::G4Figure(gn, "011-2")); }),
            ErrorCode::kPreconditionViolated);
}

TEST(CountAllTest, SingleBit) {
  const CountReport r = CountAll(1);
  EXPECT_LE(r.total_moves, 6u);
  EXPECT_TRUE(r.all_verified());
  EXPECT_EQ(r.omega_verified.size(), 2u);
}

TEST(CountAllTest, FourBitsMatchesClosedForm) {
  const CountReport r = CountAll(4);
  EXPECT_TRUE(r.all_verified());
  EXPECT_GE(r.total_moves, 16u);
  EXPECT_EQ(r.total_moves, ClosedFormTotal(4));
  EXPECT_EQ(r.total_moves, 206u);
}

TEST(CountAllTest, ClosedFormAndBoundsUpTo14) {
  for (int n = 1; n <= 14; ++n) {
    const CountReport r = CountAll(n);
    EXPECT_TRUE(r.all_verified()) << n;
    EXPECT_EQ(r.omega_verified.size(), std::size_t{1} << n);
    EXPECT_EQ(r.total_moves, ClosedFormTotal(n)) << n;
    EXPECT_GE(r.total_moves, std::uint64_t{1} << n) << n;
    EXPECT_LE(r.max_increment_moves, IncrementMoveBound(n - 1)) << n;
  }
}

TEST(CountAllTest, DoublingRatio) {
  const double ratio = static_cast<double>(CountAll(10).total_moves) /
                       static_cast<double>(CountAll(9).total_moves);
  EXPECT_GE(ratio, 1.8);
  EXPECT_LE(ratio, 2.2);
}

TEST(CountAllTest, TraceReplaysAndFairFinish) {
  CountOptions opts;
  opts.record_trace = true;
  opts.fair_finish = true;
  const CountReport r = CountAll(3, opts);
  ASSERT_TRUE(r.trace.has_value());
  const GnInstance gn = BuildGn(3);
  EXPECT_EQ(r.trace->move_count, r.total_moves + r.fair_finish_moves);
  EXPECT_EQ(Replay(gn.graph(), *r.trace), r.trace->final_config);
  ASSERT_TRUE(r.terminal_stable_after_fair_run.has_value());
  EXPECT_TRUE(*r.terminal_stable_after_fair_run);
}

TEST(CountAllTest, RejectsOutOfRange) {
  EXPECT_THROW(CountAll(0), Error);
  EXPECT_THROW(CountAll(kMaxCountBits + 1), Error);
}

TEST(SwitchPropertyTest, RandomizedApplications) {
  Rng rng(2024);
  testing::SwitchTally tally;
  while (tally.applications < 400) testing::RandomSwitchTrial(rng, tally);
  for (const auto& f : tally.failures) ADD_FAILURE() << f;
}

}  // namespace
}  // namespace mplus
