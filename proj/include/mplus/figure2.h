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

#ifndef MPLUS_FIGURE2_H_
#define MPLUS_FIGURE2_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mplus/engine.h"
#include "mplus/graph.h"
#include "mplus/rules.h"

namespace mplus {

// The worked 7-node path example: 7-8-9-10-2-24-15 with M = {(8,9),(2,24)}.
// In the initial configuration (a) the pair 8,9 is midway through its own
// rematch (p_7 = 8, p_8 = 7, p_9 = 10) and 2,24 have stale alpha values.
struct Figure2Fixture {
  Graph graph;
  Configuration initial;
};

Figure2Fixture MakeFigure2Fixture();

// Builds the path with a chosen edge list; used to exercise broken fixtures.
Figure2Fixture MakeFigure2Fixture(const std::vector<IdentPair>& edges);

// Update@2, Update@24, MatchFirst@2, SingleNode@10, MatchFirst@2,
// MatchSecond@24, SingleNode@15, Update@9, ResetMatch@8, SingleNode@7.
std::vector<Move> Figure2Schedule(const Graph& g);

// Pointer snapshot keyed by identifier: absent key means p = null.
using PointerMap = std::map<std::int64_t, std::int64_t>;

struct Figure2Frame {
  std::string label;  // sub-figure letter shown after the move
  PointerMap pointers;
};

// Expected pointers after each scheduled move. Moves that only touch
// alpha/beta/s repeat the previous sub-figure.
std::vector<Figure2Frame> Figure2ExpectedFrames();
PointerMap Figure2Pointers(char sub_figure);

PointerMap PointersOf(const Graph& g, const Configuration& c);

struct Figure2Report {
  std::uint64_t moves = 0;
  bool stabilized = false;
  std::vector<Edge> matching;
  std::size_t maximum_size = 0;
  Trace trace;
  // Configuration after each move, in order.
  std::vector<Configuration> snapshots;
};

// Replays the schedule with every move guard-checked, comparing pointers
// against the expected frame after each move. Throws AssertionFailed with
// the failing step and a diff of expected and actual local state.
Figure2Report ReplayFigure2(const Figure2Fixture& fixture);

}  // namespace mplus

#endif  // MPLUS_FIGURE2_H_
