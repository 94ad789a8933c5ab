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

#include "mplus/io.h"

#include <gtest/gtest.h>

#include <regex>

#include "mplus/error.h"
#include "mplus/figure2.h"
#include "mplus/generators.h"
#include "mplus/gn.h"
#include "test_util.h"

namespace mplus {
namespace {

using testing::N;

int CountMatches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<int>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(GraphJsonTest, Shape) {
  const Graph g = MakeFigure2Fixture().graph;
  const Json j = GraphToJson(g);
  EXPECT_EQ(j["nodes"].size(), 7u);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(j["matching"].size(), 2u);
}

TEST(ConfigJsonTest, MissingEntriesDefault) {
  const Graph g = MakeFigure2Fixture().graph;
  const Json j = Json::parse(R"({"p": {"7": 8}, "s": {"8": true}})");
  const Configuration c = ConfigFromJson(g, j);
  EXPECT_EQ(c[N(g, 7)].p, N(g, 8));
  EXPECT_TRUE(c[N(g, 8)].s);
  EXPECT_EQ(c[N(g, 9)].p, std::nullopt);
  EXPECT_FALSE(c[N(g, 9)].s);
}

TEST(ConfigJsonTest, ParseErrors) {
  const Graph g = MakeFigure2Fixture().graph;
  EXPECT_EQ(CodeOf([&] { ConfigFromJson(g, Json::parse(R"({"p": {"abc": 8}})")); }),
            ErrorCode::kParseError);
  EXPECT_THROW(ConfigFromJson(g, Json::parse(R"({"p": {"7": 99}})")), Error);
  EXPECT_THROW(GraphFromJson(Json::parse(R"({"nodes": [{"id": 1}], "edges": [[1]]})")), Error);
  EXPECT_THROW(ReadJsonFile("/nonexistent/file.json"), Error);
  const Json bad_trace = Json::parse(
      R"({"initial": {}, "steps": [[{"node": 2, "rule": "Jump"}]], "move_count": 1,
          "stabilized": false})");
  EXPECT_EQ(CodeOf([&] { TraceFromJson(g, bad_trace); }), ErrorCode::kParseError);
}

TEST(RoundTripTest, RandomGraphsConfigsTraces) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = RandomGraph(1 + static_cast<int>(rng.Below(10)), 0.4, rng);
    const Graph g2 = GraphFromJson(GraphToJson(g));
    EXPECT_EQ(GraphToJson(g2).dump(), GraphToJson(g).dump());
    const Configuration c = RandomConfiguration(g, rng);
    EXPECT_EQ(ConfigFromJson(g, ConfigToJson(g, c)), c);
    const Trace t = mplus::Run(g, c, DaemonStrategy::RandomDistributed(rng.Next(), 0.4));
    const Trace back = TraceFromJson(g, TraceToJson(g, t));
    EXPECT_EQ(back.steps, t.steps);
    EXPECT_EQ(back.move_count, t.move_count);
    EXPECT_EQ(back.stabilized, t.stabilized);
    EXPECT_EQ(back.final_config, t.final_config);
  }
}

TEST(TraceJsonTest, RuleNamesAreExact) {
  const auto fx = MakeFigure2Fixture();
  const Figure2Report r = ReplayFigure2(fx);
  const Json j = TraceToJson(fx.graph, r.trace);
  EXPECT_EQ(j["move_count"], 10);
  EXPECT_EQ(j["steps"][0][0]["rule"], "Update");
  EXPECT_EQ(j["steps"][0][0]["node"], 2);
  EXPECT_EQ(j["steps"][3][0]["rule"], "SingleNode");
}

TEST(DotTest, ArcCounts) {
  const auto fx = MakeFigure2Fixture();
  const std::string arc = R"(class="p")";
  const std::string a = ExportDot(fx.graph, fx.initial);
  EXPECT_EQ(CountMatches(a, arc), 3);
  EXPECT_NE(a.find("n7 -> n8"), std::string::npos);
  EXPECT_NE(a.find("n9 -> n10"), std::string::npos);
  const Figure2Report r = ReplayFigure2(fx);
  EXPECT_EQ(CountMatches(ExportDot(fx.graph, r.snapshots.back()), arc), 4);
  const GnInstance gn = BuildGn(4);
  const std::string zero = ExportDot(gn.graph(), ZeroConfiguration(gn));
  EXPECT_EQ(CountMatches(zero, arc), 0);
  EXPECT_EQ(CountMatches(zero, "penwidth=3"), 4 + 6);
  EXPECT_EQ(zero, ExportDot(gn.graph(), ZeroConfiguration(gn)));
}

TEST(PointerArcsTest, SortedBySource) {
  const auto fx = MakeFigure2Fixture();
  const auto arcs = PointerArcs(fx.graph, fx.initial);
  ASSERT_EQ(arcs.size(), 3u);
  EXPECT_EQ(fx.graph.ident(arcs[0].first).value, 7);
  EXPECT_EQ(fx.graph.ident(arcs[2].first).value, 9);
}

}  // namespace
}  // namespace mplus
