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

#include "mplus/rules.h"

#include <algorithm>
#include <string>

#include "mplus/error.h"

namespace mplus {
namespace {

std::string Name(const Graph& g, NodeId v) {
  return std::to_string(g.ident(v).value);
}

void RequireNode(const Graph& g, NodeId v) {
  if (!g.contains(v)) {
    throw Error(ErrorCode::kUnknownNode, "index " + std::to_string(v.index));
  }
}

void RequirePartners(const Graph& g, NodeId v, NodeId u) {
  RequireNode(g, v);
  RequireNode(g, u);
  if (g.mate(v) != u) {
    throw Error(ErrorCode::kNotPartners, Name(g, v) + " and " + Name(g, u));
  }
}

bool Less(const Graph& g, MaybeNode a, MaybeNode b) {
  return g.less(*a, *b);
}

}  // namespace

std::string_view RuleName(RuleKind r) {
  switch (r) {
    case RuleKind::kSingleNode: return "SingleNode";
    case RuleKind::kUpdate: return "Update";
    case RuleKind::kMatchFirst: return "MatchFirst";
    case RuleKind::kMatchSecond: return "MatchSecond";
    case RuleKind::kResetMatch: return "ResetMatch";
  }
  return "?";
}

std::optional<RuleKind> ParseRuleName(std::string_view name) {
  for (RuleKind r : kAllRules) {
    if (RuleName(r) == name) return r;
  }
  return std::nullopt;
}

MaybeNode Lowest(const Graph& g, std::span<const NodeId> nodes) {
  MaybeNode best;
  for (NodeId v : nodes) {
    if (!best || g.less(v, *best)) best = v;
  }
  return best;
}

int UniqueNonNull(std::span<const MaybeNode> values) {
  int count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) seen = seen || values[j] == values[i];
    if (!seen) ++count;
  }
  return count;
}

std::pair<MaybeNode, MaybeNode> BestRematch(const Graph& g,
                                            const Configuration& c, NodeId v) {
  RequireNode(g, v);
  if (!g.is_matched(v)) throw Error(ErrorCode::kNotMatchedNode, Name(g, v));
  MaybeNode a;
  for (NodeId u : g.neighbors(v)) {
    if (!g.is_single(u)) continue;
    const MaybeNode& pu = c[u].p;
    if (pu && *pu != v) continue;
    if (!a) {
      a = u;
    } else {
      return {a, u};
    }
  }
  return {a, std::nullopt};
}

MaybeNode AskFirst(const Graph& g, const Configuration& c, NodeId v, NodeId u) {
  RequirePartners(g, v, u);
  const LocalState& sv = c[v];
  const LocalState& su = c[u];
  if (!sv.alpha || !su.alpha) return std::nullopt;
  const std::array<MaybeNode, 4> pool = {sv.alpha, sv.beta, su.alpha, su.beta};
  const int unique = UniqueNonNull(pool);
  if (unique < 2 || unique > 4) return std::nullopt;
  const bool same = sv.alpha == su.alpha;
  if (Less(g, sv.alpha, su.alpha) || (same && !sv.beta) ||
      (same && su.beta && g.less(v, u))) {
    return sv.alpha;
  }
  return std::nullopt;
}

MaybeNode AskSecond(const Graph& g, const Configuration& c, NodeId v,
                    NodeId u) {
  if (!AskFirst(g, c, u, v)) return std::nullopt;
  const LocalState& sv = c[v];
  const MaybeNode& removed = c[u].alpha;
  MaybeNode best;
  for (const MaybeNode& cand : {sv.alpha, sv.beta}) {
    if (!cand || cand == removed) continue;
    if (!best || Less(g, cand, best)) best = cand;
  }
  return best;
}

MaybeNode LowestProposer(const Graph& g, const Configuration& c, NodeId v) {
  for (NodeId u : g.neighbors(v)) {
    if (c[u].p == v) return u;
  }
  return std::nullopt;
}

bool PointsBack(const Graph& g, const Configuration& c, NodeId v) {
  const MaybeNode& pv = c[v].p;
  return pv && g.adjacent(v, *pv) && c[*pv].p == v;
}

RuleSet EnabledRules(const Graph& g, const Configuration& c, NodeId v) {
  RequireNode(g, v);
  RuleSet out;
  const LocalState& sv = c[v];

  if (g.is_single(v)) {
    const bool pv_matched_neighbor =
        sv.p && g.is_matched(*sv.p) && g.adjacent(v, *sv.p);
    if ((!sv.p && LowestProposer(g, c, v)) || (sv.p && !pv_matched_neighbor) ||
        (sv.p && !PointsBack(g, c, v))) {
      out.insert(RuleKind::kSingleNode);
    }
    return out;
  }

  const NodeId m = *g.mate(v);
  const bool pv_single_neighbor =
      sv.p && g.is_single(*sv.p) && g.adjacent(v, *sv.p);
  if (sv.p && !pv_single_neighbor) {
    out.insert(RuleKind::kUpdate);
  } else {
    // Here p_v is null or a single neighbor, so p_{p_v} is a legal read.
    const auto best = BestRematch(g, c, v);
    const bool stale = std::pair(sv.alpha, sv.beta) != best;
    if (stale && (!sv.p || (c[*sv.p].p && c[*sv.p].p != v))) {
      out.insert(RuleKind::kUpdate);
    }
  }

  const MaybeNode x = AskFirst(g, c, v, m);
  if (x && (sv.p != x || sv.s != PointsBack(g, c, v))) {
    out.insert(RuleKind::kMatchFirst);
  }
  const MaybeNode y = AskSecond(g, c, v, m);
  if (y && c[m].s && sv.p != y) out.insert(RuleKind::kMatchSecond);
  if (!x && !y && (sv.p || sv.s)) out.insert(RuleKind::kResetMatch);
  return out;
}

LocalState NextState(const Graph& g, const Configuration& c, NodeId v,
                     RuleKind r) {
  LocalState next = c[v];
  switch (r) {
    case RuleKind::kSingleNode:
      next.p = LowestProposer(g, c, v);
      break;
    case RuleKind::kUpdate: {
      auto [a, b] = BestRematch(g, c, v);
      next.alpha = a;
      next.beta = b;
      next.p = std::nullopt;
      next.s = false;
      break;
    }
    case RuleKind::kMatchFirst: {
      const MaybeNode x = AskFirst(g, c, v, *g.mate(v));
      next.p = x;
      next.s = x && g.adjacent(v, *x) && c[*x].p == v;
      break;
    }
    case RuleKind::kMatchSecond:
      next.p = AskSecond(g, c, v, *g.mate(v));
      break;
    case RuleKind::kResetMatch:
      next.p = std::nullopt;
      next.s = false;
      break;
  }
  return next;
}

Configuration ApplyRule(const Graph& g, const Configuration& c, NodeId v,
                        RuleKind r) {
  if (!EnabledRules(g, c, v).contains(r)) {
    throw Error(ErrorCode::kRuleNotEnabled,
                std::string(RuleName(r)) + " at node " + Name(g, v));
  }
  Configuration next = c;
  next[v] = NextState(g, c, v, r);
  return next;
}

std::vector<Edge> ExtractMatching(const Graph& g, const Configuration& c) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const LocalState& sa = c[e.a];
    const LocalState& sb = c[e.b];
    const bool mutual = sa.p == e.b && sb.p == e.a;
    const bool fallback = !sa.p && !sb.p && g.mate(e.a) == e.b;
    if (mutual || fallback) out.push_back(e);
  }
  return out;
}

}  // namespace mplus
