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

#include "mplus/gn.h"

#include <gtest/gtest.h>

#include <set>

#include "mplus/engine.h"
#include "mplus/error.h"
#include "mplus/figure2.h"
#include "mplus/generators.h"
#include "test_util.h"

namespace mplus {
namespace {

using testing::E;
using testing::N;

std::int64_t Id(const GnInstance& gn, NodeId v) { return gn.graph().ident(v).value; }

TEST(BuildGnTest, G4Identifiers) {
  const GnInstance gn = BuildGn(4);
  EXPECT_EQ(Id(gn, gn.r2(1, 0)), 1);
  EXPECT_EQ(Id(gn, gn.r2(3, 2)), 6);
  EXPECT_EQ(Id(gn, gn.b(0, 1)), 7);
  EXPECT_EQ(Id(gn, gn.b(1, 1)), 11);
  EXPECT_EQ(Id(gn, gn.b(3, 4)), 22);
  EXPECT_EQ(Id(gn, gn.r1(1, 0)), 23);
  EXPECT_EQ(Id(gn, gn.r1(3, 2)), 28);
  EXPECT_EQ(gn.graph().size(), 28u);
}

TEST(BuildGnTest, SingleBit) {
  const GnInstance gn = BuildGn(1);
  EXPECT_EQ(gn.graph().size(), 4u);
  EXPECT_EQ(gn.graph().edge_count(), 3u);
  EXPECT_EQ(gn.graph().matching().size(), 1u);
}

TEST(BuildGnTest, RejectsBadN) {
  for (int n : {0, -3, 63}) {
    try {
      BuildGn(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidN);
    }
  }
}

// Rebuilds the expected topology from the index formulas and compares.
TEST(BuildGnTest, TopologyAndNamingExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    const GnInstance gn = BuildGn(n);
    const Graph& g = gn.graph();
    const std::int64_t s = GnInstance::PairCount(n);
    const std::int64_t c = 4 * n;
    EXPECT_EQ(static_cast<std::int64_t>(g.size()), n * n + 3 * n);

    std::set<std::pair<std::int64_t, std::int64_t>> want_edges, want_m;
    auto add = [](auto& set, std::int64_t a, std::int64_t b) {
      set.emplace(std::min(a, b), std::max(a, b));
    };
    auto bid = [&](int i, int k) { return s + 4 * i + k; };
    std::int64_t pair = 0;
    for (int i = 0; i < n; ++i) {
      for (int k = 1; k <= 3; ++k) add(want_edges, bid(i, k), bid(i, k + 1));
      add(want_m, bid(i, 2), bid(i, 3));
      for (int j = 0; j < i; ++j) {
        ++pair;
        const std::int64_t r2 = pair, r1 = s + c + pair;
        EXPECT_EQ(Id(gn, gn.r2(i, j)), r2);
        EXPECT_EQ(Id(gn, gn.r1(i, j)), r1);
        add(want_edges, bid(i, 1), r1);
        add(want_edges, r1, r2);
        add(want_edges, r2, bid(j, 4));
        add(want_m, r1, r2);
      }
      for (int k = 1; k <= 4; ++k) EXPECT_EQ(Id(gn, gn.b(i, k)), bid(i, k));
    }
    std::set<std::pair<std::int64_t, std::int64_t>> got_edges, got_m;
    for (const Edge& e : g.edges()) add(got_edges, Id(gn, e.a), Id(gn, e.b));
    for (const Edge& e : g.matching()) add(got_m, Id(gn, e.a), Id(gn, e.b));
    EXPECT_EQ(got_edges, want_edges) << n;
    EXPECT_EQ(got_m, want_m) << n;

    // Ordering clauses.
    for (int i = 0; i < n; ++i) {
      for (int k = 1; k <= 4; ++k) {
        for (int i2 = 0; i2 < n; ++i2) {
          for (int k2 = 1; k2 <= 4; ++k2) {
            EXPECT_EQ(Id(gn, gn.b(i, k)) < Id(gn, gn.b(i2, k2)),
                      std::make_pair(i, k) < std::make_pair(i2, k2));
          }
        }
        for (int a = 1; a < n; ++a) {
          for (int b = 0; b < a; ++b) {
            EXPECT_LT(Id(gn, gn.b(i, 2)), Id(gn, gn.r1(a, b)));
            EXPECT_GT(Id(gn, gn.b(i, 3)), Id(gn, gn.r2(a, b)));
          }
        }
      }
    }

    // Singles are exactly the outer bit nodes; matched nodes see one single.
    std::set<std::int64_t> singles;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      const NodeId node{v};
      if (g.is_single(node)) {
        singles.insert(Id(gn, node));
        continue;
      }
      int single_neighbors = 0;
      for (NodeId w : g.neighbors(node)) single_neighbors += g.is_single(w);
      EXPECT_EQ(single_neighbors, 1);
    }
    std::set<std::int64_t> want_singles;
    for (int i = 0; i < n; ++i) {
      want_singles.insert(bid(i, 1));
      want_singles.insert(bid(i, 4));
    }
    EXPECT_EQ(singles, want_singles);
  }
}

TEST(ZeroConfigurationTest, DecodesToZero) {
  for (int n = 1; n <= 16; ++n) {
    const GnInstance gn = BuildGn(n);
    const Configuration c = ZeroConfiguration(gn);
    EXPECT_EQ(DecodeOmega(gn, c), 0u) << n;
  }
  const GnInstance g4 = BuildGn(4);
  EXPECT_FALSE(IsStable(g4.graph(), ZeroConfiguration(g4)));
  const GnInstance g1 = BuildGn(1);
  EXPECT_EQ(ClassifyEdge(g1.graph(), ZeroConfiguration(g1), g1.bit_edge(0)), EdgeState::kOff);
}

TEST(EdgeStateTest, Figure2Examples) {
  const auto fx = MakeFigure2Fixture();
  const Graph& g = fx.graph;
  const EdgeRoles roles = ResolveRoles(g, E(g, 9, 8));
  EXPECT_EQ(roles.v, N(g, 8));
  EXPECT_EQ(roles.x, N(g, 7));
  EXPECT_EQ(roles.u, N(g, 9));
  EXPECT_EQ(roles.y, N(g, 10));
  EXPECT_EQ(ClassifyEdge(g, fx.initial, E(g, 9, 8)), EdgeState::kOn);
  EXPECT_EQ(ClassifyEdge(g, fx.initial, E(g, 24, 2)), EdgeState::kOff);
  const Figure2Report r = ReplayFigure2(fx);
  // Sub-figure (e) is reached after the seventh move.
  EXPECT_EQ(PointersOf(g, r.snapshots[6]), Figure2Pointers('e'));
  EXPECT_EQ(ClassifyEdge(g, r.snapshots[6], E(g, 9, 8)), EdgeState::kAlmostOn);
}

TEST(EdgeStateTest, RoleErrors) {
  const auto fx = MakeFigure2Fixture();
  const Graph& g = fx.graph;
  try {
    ClassifyEdge(g, fx.initial, E(g, 7, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMatchedEdge);
  }
  // Both partners see two single nodes.
  const Graph sq = Graph::Build(testing::Ids({1, 2, 3, 4}),
                                testing::Pairs({{1, 2}, {1, 3}, {2, 4}, {1, 4}}),
                                testing::Pairs({{1, 2}}));
  try {
    ResolveRoles(sq, E(sq, 1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAmbiguousSingleNeighbor);
  }
}

// Reference classifier written directly from the predicate definitions.
EdgeState ReferenceState(const Configuration& c, const EdgeRoles& r) {
  const auto& pu = c[r.u].p;
  const auto& pv = c[r.v].p;
  const auto& px = c[r.x].p;
  const auto& py = c[r.y].p;
  const bool off = !pu && !pv && !px && !py;
  const bool core = pu == r.y && px == r.v && pv == r.x;
  const bool on = core && !py;
  const bool almost = core && py && *py != r.u;
  EXPECT_LE(off + on + almost, 1);
  if (off) return EdgeState::kOff;
  if (on) return EdgeState::kOn;
  if (almost) return EdgeState::kAlmostOn;
  return EdgeState::kOther;
}

TEST(EdgeStateTest, MatchesReferenceOnRandomStates) {
  const GnInstance gn = BuildGn(4);
  const Graph& g = gn.graph();
  Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    Configuration c = RandomConfiguration(g, rng);
    // Bias toward the interesting region: sometimes force the core pattern.
    const Edge e = g.matching()[rng.Below(g.matching().size())];
    const EdgeRoles r = ResolveRoles(g, e);
    if (rng.Bernoulli(0.5)) {
      c[r.u].p = r.y;
      c[r.x].p = r.v;
      c[r.v].p = r.x;
      if (rng.Bernoulli(0.3)) c[r.y].p.reset();
    }
    if (rng.Bernoulli(0.1)) {
      c[r.u].p.reset();
      c[r.v].p.reset();
      c[r.x].p.reset();
      c[r.y].p.reset();
    }
    EXPECT_EQ(ClassifyEdge(g, c, e), ReferenceState(c, r));
    EXPECT_EQ(LocallyOff(g, c, e), !c[r.u].p && !c[r.v].p && !c[r.x].p);
  }
}

TEST(DecodeTest, G4Figures) {
  const GnInstance gn = BuildGn(4);
  const Configuration f0010 = testing::G4Figure(gn, "0010");
  EXPECT_EQ(DecodeBit(gn, f0010, 0), 0);
  EXPECT_EQ(DecodeBit(gn, f0010, 1), 1);
  EXPECT_EQ(DecodeBit(gn, f0010, 2), 0);
  EXPECT_EQ(DecodeBit(gn, f0010, 3), 0);
  EXPECT_EQ(DecodeOmega(gn, f0010), 2u);
  EXPECT_EQ(DecodeOmega(gn, testing::G4Figure(gn, "0011")), 3u);
  EXPECT_EQ(DecodeOmega(gn, testing::G4Figure(gn, "0100")), 4u);
  for (const char* name : {"011-1", "011-2", "011-3"}) {
    const Configuration c = testing::G4Figure(gn, name);
    EXPECT_EQ(DecodeBit(gn, c, 0), std::nullopt) << name;
    EXPECT_EQ(DecodeBit(gn, c, 1), std::nullopt) << name;
    EXPECT_EQ(DecodeOmega(gn, c), std::nullopt) << name;
  }
  EXPECT_THROW(DecodeBit(gn, f0010, 4), Error);
  EXPECT_THROW(DecodeBit(gn, f0010, -1), Error);
}

}  // namespace
}  // namespace mplus
