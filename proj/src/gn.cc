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

#include <string>

#include "mplus/error.h"

namespace mplus {

GnInstance BuildGn(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidN, "N must be >= 1, got " + std::to_string(n));
  if (n > 62) throw Error(ErrorCode::kInvalidN, "N must be <= 62 to fit omega");
  const std::int64_t s = GnInstance::PairCount(n);
  const std::int64_t c = 4 * static_cast<std::int64_t>(n);

  std::vector<Identifier> ids;
  std::vector<IdentPair> edges;
  std::vector<IdentPair> matching;
  auto b_id = [&](int i, int k) { return Identifier{s + 4 * i + k}; };
  auto r2_id = [&](int i, int j) {
    return Identifier{static_cast<std::int64_t>(GnInstance::PairIndex(i, j)) + 1};
  };
  auto r1_id = [&](int i, int j) {
    return Identifier{s + c + static_cast<std::int64_t>(GnInstance::PairIndex(i, j)) + 1};
  };

  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= 4; ++k) ids.push_back(b_id(i, k));
    for (int k = 1; k <= 3; ++k) edges.emplace_back(b_id(i, k), b_id(i, k + 1));
    matching.emplace_back(b_id(i, 2), b_id(i, 3));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      ids.push_back(r1_id(i, j));
      ids.push_back(r2_id(i, j));
      edges.emplace_back(b_id(i, 1), r1_id(i, j));
      edges.emplace_back(r1_id(i, j), r2_id(i, j));
      edges.emplace_back(r2_id(i, j), b_id(j, 4));
      matching.emplace_back(r1_id(i, j), r2_id(i, j));
    }
  }

  GnInstance gn(n, Graph::Build(ids, edges, matching));
  const Graph& g = gn.graph_;
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= 4; ++k) gn.b_.push_back(g.at(b_id(i, k)));
  }
  gn.r1_.resize(static_cast<std::size_t>(s));
  gn.r2_.resize(static_cast<std::size_t>(s));
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      gn.r1_[GnInstance::PairIndex(i, j)] = g.at(r1_id(i, j));
      gn.r2_[GnInstance::PairIndex(i, j)] = g.at(r2_id(i, j));
    }
  }
  return gn;
}

Configuration ZeroConfiguration(const GnInstance& gn) {
  return Configuration(gn.graph().size());
}

const char* EdgeStateName(EdgeState s) {
  switch (s) {
    case EdgeState::kOff: return "Off";
    case EdgeState::kOn: return "On";
    case EdgeState::kAlmostOn: return "AlmostOn";
    case EdgeState::kOther: return "Other";
  }
  return "?";
}

namespace {

NodeId OnlySingleNeighbor(const Graph& g, NodeId v) {
  MaybeNode found;
  int count = 0;
  for (NodeId w : g.neighbors(v)) {
    if (g.is_single(w)) {
      found = w;
      ++count;
    }
  }
  if (count != 1) {
    throw Error(ErrorCode::kAmbiguousSingleNeighbor,
                "node " + std::to_string(g.ident(v).value) + " has " +
                    std::to_string(count) + " single neighbors");
  }
  return *found;
}

}  // namespace

EdgeRoles ResolveRoles(const Graph& g, Edge e) {
  if (!g.contains(e.a) || !g.contains(e.b) || g.mate(e.a) != e.b) {
    throw Error(ErrorCode::kNotMatchedEdge, "edge is not in M");
  }
  const NodeId sa = OnlySingleNeighbor(g, e.a);
  const NodeId sb = OnlySingleNeighbor(g, e.b);
  if (g.less(sa, sb)) return EdgeRoles{e.a, e.b, sa, sb};
  return EdgeRoles{e.b, e.a, sb, sa};
}

EdgeState ClassifyEdge(const Graph& g, const Configuration& c, Edge e) {
  const auto [v, u, x, y] = ResolveRoles(g, e);
  const MaybeNode &pu = c[u].p, &pv = c[v].p, &px = c[x].p, &py = c[y].p;
  if (!pu && !pv && !px && !py) return EdgeState::kOff;
  if (pu == y && px == v && pv == x) {
    if (!py) return EdgeState::kOn;
    if (py != u) return EdgeState::kAlmostOn;
  }
  return EdgeState::kOther;
}

bool LocallyOff(const Graph& g, const Configuration& c, Edge e) {
  const auto roles = ResolveRoles(g, e);
  return !c[roles.u].p && !c[roles.v].p && !c[roles.x].p;
}

std::optional<int> DecodeBit(const GnInstance& gn, const Configuration& c, int i) {
  if (i < 0 || i >= gn.n_bits()) {
    throw Error(ErrorCode::kIndexOutOfRange, "bit " + std::to_string(i));
  }
  switch (ClassifyEdge(gn.graph(), c, gn.bit_edge(i))) {
    case EdgeState::kOn: return 1;
    case EdgeState::kOff: return 0;
    default: return std::nullopt;
  }
}

std::optional<std::uint64_t> DecodeOmega(const GnInstance& gn,
                                         const Configuration& c) {
  std::uint64_t omega = 0;
  for (int i = 0; i < gn.n_bits(); ++i) {
    const auto bit = DecodeBit(gn, c, i);
    if (!bit) return std::nullopt;
    omega |= static_cast<std::uint64_t>(*bit) << i;
  }
  return omega;
}

}  // namespace mplus
