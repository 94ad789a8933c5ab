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

#include "mplus/figure2.h"

#include <algorithm>
#include <sstream>

#include "mplus/error.h"
#include "mplus/oracle.h"

namespace mplus {
namespace {

const std::vector<IdentPair>& PathEdges() {
  static const std::vector<IdentPair> edges = {
      {{7}, {8}}, {{8}, {9}}, {{9}, {10}}, {{10}, {2}}, {{2}, {24}}, {{24}, {15}}};
  return edges;
}

std::string Describe(const PointerMap& m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [from, to] : m) {
    out << (first ? "" : ", ") << from << "->" << to;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

Figure2Fixture MakeFigure2Fixture() { return MakeFigure2Fixture(PathEdges()); }

Figure2Fixture MakeFigure2Fixture(const std::vector<IdentPair>& edges) {
  const std::vector<Identifier> ids = {{7}, {8}, {9}, {10}, {2}, {24}, {15}};
  Graph g = Graph::Build(ids, edges, {{{8}, {9}}, {{2}, {24}}});
  Configuration c(g.size());
  auto node = [&g](std::int64_t id) { return g.at(Identifier{id}); };
  c[node(7)].p = node(8);
  c[node(8)].p = node(7);
  c[node(9)].p = node(10);
  c[node(8)].alpha = node(7);
  c[node(9)].alpha = node(10);
  c[node(8)].s = true;
  return Figure2Fixture{std::move(g), std::move(c)};
}

std::vector<Move> Figure2Schedule(const Graph& g) {
  auto mv = [&g](std::int64_t id, RuleKind r) { return Move{g.at(Identifier{id}), r}; };
  return {mv(2, RuleKind::kUpdate),      mv(24, RuleKind::kUpdate),
          mv(2, RuleKind::kMatchFirst),  mv(10, RuleKind::kSingleNode),
          mv(2, RuleKind::kMatchFirst),  mv(24, RuleKind::kMatchSecond),
          mv(15, RuleKind::kSingleNode), mv(9, RuleKind::kUpdate),
          mv(8, RuleKind::kResetMatch),  mv(7, RuleKind::kSingleNode)};
}

PointerMap Figure2Pointers(char sub_figure) {
  switch (sub_figure) {
    case 'a': return {{7, 8}, {8, 7}, {9, 10}};
    case 'b': return {{7, 8}, {8, 7}, {9, 10}, {2, 10}};
    case 'c': return {{7, 8}, {8, 7}, {9, 10}, {2, 10}, {10, 2}};
    case 'd': return {{7, 8}, {8, 7}, {9, 10}, {2, 10}, {10, 2}, {24, 15}};
    case 'e': return {{7, 8}, {8, 7}, {9, 10}, {2, 10}, {10, 2}, {24, 15}, {15, 24}};
    case 'f': return {{7, 8}, {8, 7}, {2, 10}, {10, 2}, {24, 15}, {15, 24}};
    case 'g': return {{7, 8}, {2, 10}, {10, 2}, {24, 15}, {15, 24}};
    case 'h': return {{2, 10}, {10, 2}, {24, 15}, {15, 24}};
  }
  throw Error(ErrorCode::kInvalidArgument, std::string("no sub-figure ") + sub_figure);
}

std::vector<Figure2Frame> Figure2ExpectedFrames() {
  std::vector<Figure2Frame> frames;
  for (char f : std::string("aabccdefgh")) {
    frames.push_back({std::string(1, f), Figure2Pointers(f)});
  }
  return frames;
}

PointerMap PointersOf(const Graph& g, const Configuration& c) {
  PointerMap out;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    const NodeId v{i};
    if (c[v].p) out[g.ident(v).value] = g.ident(*c[v].p).value;
  }
  return out;
}

Figure2Report ReplayFigure2(const Figure2Fixture& fixture) {
  const Graph& g = fixture.graph;
  const auto schedule = Figure2Schedule(g);
  const auto frames = Figure2ExpectedFrames();

  Figure2Report report;
  report.trace.initial = fixture.initial;
  Configuration c = fixture.initial;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const Move& m = schedule[k];
    const std::string where = "step " + std::to_string(k + 1) + " (" +
                              std::string(RuleName(m.rule)) + "@" +
                              std::to_string(g.ident(m.node).value) + ")";
    try {
      c = ApplyStep(g, c, std::vector<Move>{m});
    } catch (const Error& e) {
      throw Error(ErrorCode::kAssertionFailed, where + ": " + e.what());
    }
    const PointerMap actual = PointersOf(g, c);
    if (actual != frames[k].pointers) {
      throw Error(ErrorCode::kAssertionFailed,
                  where + ": sub-figure (" + frames[k].label + ") expects p = " +
                      Describe(frames[k].pointers) + ", got p = " + Describe(actual));
    }
    report.trace.steps.push_back({m});
    report.snapshots.push_back(c);
  }
  report.moves = schedule.size();
  report.stabilized = IsStable(g, c);
  if (!report.stabilized) {
    throw Error(ErrorCode::kAssertionFailed, "final configuration is not stable");
  }
  report.matching = ExtractMatching(g, c);
  report.maximum_size = MaximumMatchingSize(g);
  const std::vector<Edge> expected = {Edge::Of(g.at({8}), g.at({9})),
                                      Edge::Of(g.at({2}), g.at({10})),
                                      Edge::Of(g.at({24}), g.at({15}))};
  auto sorted = [](std::vector<Edge> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(report.matching) != sorted(expected)) {
    throw Error(ErrorCode::kAssertionFailed,
                "final matching differs from {(8,9),(2,10),(24,15)}");
  }
  if (report.matching.size() != report.maximum_size) {
    throw Error(ErrorCode::kAssertionFailed, "final matching is not maximum");
  }
  report.trace.move_count = report.moves;
  report.trace.stabilized = true;
  report.trace.final_config = c;
  return report;
}

}  // namespace mplus
