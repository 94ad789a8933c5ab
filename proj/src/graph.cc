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

#include "mplus/graph.h"

#include <algorithm>
#include <string>

#include "mplus/error.h"

namespace mplus {
namespace {

std::string Str(Identifier id) { return std::to_string(id.value); }

}  // namespace

Graph Graph::Build(std::vector<Identifier> nodes, std::vector<IdentPair> edges,
                   std::vector<IdentPair> matching) {
  Graph g;
  g.idents_ = std::move(nodes);
  const std::size_t n = g.idents_.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (g.idents_[i].value <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "identifier must be positive, got " + Str(g.idents_[i]));
    }
    auto [it, inserted] = g.lookup_.emplace(g.idents_[i].value, NodeId{i});
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateIdentifier, Str(g.idents_[i]));
    }
  }

  auto resolve = [&](Identifier id, ErrorCode code) {
    auto found = g.find(id);
    if (!found) throw Error(code, "no node with identifier " + Str(id));
    return *found;
  };

  g.adjacency_.assign(n, {});
  for (const auto& [x, y] : edges) {
    NodeId a = resolve(x, ErrorCode::kEdgeEndpointMissing);
    NodeId b = resolve(y, ErrorCode::kEdgeEndpointMissing);
    if (a == b) throw Error(ErrorCode::kSelfLoop, Str(x));
    g.adjacency_[a.index].push_back(b);
    g.adjacency_[b.index].push_back(a);
  }
  auto by_ident = [&g](NodeId a, NodeId b) { return g.less(a, b); };
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(), by_ident);
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    for (NodeId w : g.adjacency_[i]) {
      if (i < w.index) g.edges_.push_back(Edge{NodeId{i}, w});
    }
  }
  auto key = [&g](const Edge& e) {
    auto lo = std::min(g.ident(e.a), g.ident(e.b));
    auto hi = std::max(g.ident(e.a), g.ident(e.b));
    return std::pair(lo, hi);
  };
  std::sort(g.edges_.begin(), g.edges_.end(),
            [&](const Edge& l, const Edge& r) { return key(l) < key(r); });

  g.by_ident_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) g.by_ident_[i] = NodeId{i};
  std::sort(g.by_ident_.begin(), g.by_ident_.end(), by_ident);

  g.mate_.assign(n, std::nullopt);
  for (const auto& [x, y] : matching) {
    NodeId a = resolve(x, ErrorCode::kMatchingNotValid);
    NodeId b = resolve(y, ErrorCode::kMatchingNotValid);
    if (!g.adjacent(a, b)) {
      throw Error(ErrorCode::kMatchingNotValid,
                  "pair (" + Str(x) + "," + Str(y) + ") is not an edge");
    }
    if (g.mate_[a.index] || g.mate_[b.index]) {
      throw Error(ErrorCode::kMatchingNotValid,
                  "pair (" + Str(x) + "," + Str(y) + ") overlaps another pair");
    }
    g.mate_[a.index] = b;
    g.mate_[b.index] = a;
  }
  for (const Edge& e : g.edges_) {
    if (g.is_single(e.a) && g.is_single(e.b)) {
      throw Error(ErrorCode::kMatchingNotMaximal,
                  "edge (" + Str(g.ident(e.a)) + "," + Str(g.ident(e.b)) +
                      ") has two unmatched endpoints");
    }
  }
  return g;
}

bool Graph::adjacent(NodeId a, NodeId b) const {
  const auto& adj = adjacency_[a.index];
  auto it = std::lower_bound(adj.begin(), adj.end(), b,
                             [this](NodeId l, NodeId r) { return less(l, r); });
  return it != adj.end() && *it == b;
}

MaybeNode Graph::find(Identifier id) const {
  auto it = lookup_.find(id.value);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::at(Identifier id) const {
  auto found = find(id);
  if (!found) throw Error(ErrorCode::kUnknownNode, Str(id));
  return *found;
}

std::vector<Edge> Graph::matching() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (mate_[e.a.index] == e.b) out.push_back(e);
  }
  return out;
}

NodeKind Classify(const Graph& g, NodeId v) {
  if (!g.contains(v)) {
    throw Error(ErrorCode::kUnknownNode, "index " + std::to_string(v.index));
  }
  return g.is_single(v) ? NodeKind::kSingle : NodeKind::kMatched;
}

std::vector<IdentPair> GreedyMaximalMatching(const std::vector<Identifier>& nodes,
                                             const std::vector<IdentPair>& edges) {
  std::vector<IdentPair> sorted;
  sorted.reserve(edges.size());
  for (auto [x, y] : edges) {
    if (y < x) std::swap(x, y);
    sorted.emplace_back(x, y);
  }
  std::sort(sorted.begin(), sorted.end());

  std::unordered_map<std::int64_t, bool> used;
  for (Identifier id : nodes) used[id.value] = false;
  std::vector<IdentPair> out;
  for (const auto& [x, y] : sorted) {
    if (x == y || used[x.value] || used[y.value]) continue;
    used[x.value] = used[y.value] = true;
    out.emplace_back(x, y);
  }
  return out;
}

}  // namespace mplus
