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

#ifndef MPLUS_GRAPH_H_
#define MPLUS_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mplus {

// Dense internal handle of a node. Never compared by the algorithm itself;
// every ordering decision goes through the node's Identifier.
struct NodeId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

using MaybeNode = std::optional<NodeId>;

// Externally visible, totally ordered node name.
struct Identifier {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(Identifier, Identifier) = default;
};

// Unordered pair of nodes; stored with the smaller index first.
struct Edge {
  NodeId a;
  NodeId b;

  static Edge Of(NodeId x, NodeId y) { return x < y ? Edge{x, y} : Edge{y, x}; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using IdentPair = std::pair<Identifier, Identifier>;

enum class NodeKind { kSingle, kMatched };

// Immutable topology plus the underlying maximal matching M.
//
// Neighbor lists are kept sorted by ascending Identifier, so "lowest"
// scans can stop at the first hit.
class Graph {
 public:
  // Validates and builds a graph. Edges and matching pairs are given by
  // identifier. Duplicate edges are merged.
  static Graph Build(std::vector<Identifier> nodes, std::vector<IdentPair> edges,
                     std::vector<IdentPair> matching);

  std::size_t size() const { return idents_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  Identifier ident(NodeId v) const { return idents_[v.index]; }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v.index]; }
  MaybeNode mate(NodeId v) const { return mate_[v.index]; }
  bool is_single(NodeId v) const { return !mate_[v.index].has_value(); }
  bool is_matched(NodeId v) const { return mate_[v.index].has_value(); }
  bool adjacent(NodeId a, NodeId b) const;
  bool contains(NodeId v) const { return v.index < idents_.size(); }

  // Lookup by identifier; nullopt when absent.
  MaybeNode find(Identifier id) const;
  // Like find() but throws UnknownNode.
  NodeId at(Identifier id) const;

  // True iff ident(a) < ident(b).
  bool less(NodeId a, NodeId b) const { return ident(a) < ident(b); }

  // All edges, sorted by (min identifier, max identifier).
  const std::vector<Edge>& edges() const { return edges_; }
  // Edges of M, same order as edges().
  std::vector<Edge> matching() const;
  // Nodes in ascending identifier order.
  const std::vector<NodeId>& by_ident() const { return by_ident_; }

 private:
  Graph() = default;

  std::vector<Identifier> idents_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<MaybeNode> mate_;
  std::vector<Edge> edges_;
  std::vector<NodeId> by_ident_;
  std::unordered_map<std::int64_t, NodeId> lookup_;
};

NodeKind Classify(const Graph& g, NodeId v);

// Deterministic greedy maximal matching: scans edges in ascending
// (min identifier, max identifier) order and takes every edge whose
// endpoints are both still free.
std::vector<IdentPair> GreedyMaximalMatching(const std::vector<Identifier>& nodes,
                                             const std::vector<IdentPair>& edges);

}  // namespace mplus

#endif  // MPLUS_GRAPH_H_
