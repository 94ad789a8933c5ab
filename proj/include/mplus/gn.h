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

#ifndef MPLUS_GN_H_
#define MPLUS_GN_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mplus/graph.h"
#include "mplus/rules.h"

namespace mplus {

// The counter gadget G_N: N bit-blocks b(i,1..4) plus, for every pair
// j < i, a matched square pair r1(i,j) -- r2(i,j) wired as
// b(i,1) - r1(i,j) = r2(i,j) - b(j,4).
//
// Identifiers, with s = N(N-1)/2 and c = 4N:
//   r2(i,j) = 1..s          in lexicographic (i,j) order
//   b(i,k)  = s + 4i + k
//   r1(i,j) = s+c+1..s+c+s  in lexicographic (i,j) order
class GnInstance {
 public:
  int n_bits() const { return n_; }
  const Graph& graph() const { return graph_; }

  NodeId b(int i, int k) const { return b_[4 * i + (k - 1)]; }
  NodeId r1(int i, int j) const { return r1_[PairIndex(i, j)]; }
  NodeId r2(int i, int j) const { return r2_[PairIndex(i, j)]; }

  Edge bit_edge(int i) const { return Edge::Of(b(i, 2), b(i, 3)); }
  Edge r_edge(int i, int j) const { return Edge::Of(r1(i, j), r2(i, j)); }

  static std::int64_t PairCount(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
  }
  // Position of (i,j), j < i, in lexicographic order.
  static std::size_t PairIndex(int i, int j) {
    return static_cast<std::size_t>(i) * (i - 1) / 2 + j;
  }

 private:
  friend GnInstance BuildGn(int n);
  GnInstance(int n, Graph g) : n_(n), graph_(std::move(g)) {}

  int n_;
  Graph graph_;
  std::vector<NodeId> b_;
  std::vector<NodeId> r1_;
  std::vector<NodeId> r2_;
};

GnInstance BuildGn(int n);

// All pointers null, all s false, all alpha/beta null.
Configuration ZeroConfiguration(const GnInstance& gn);

enum class EdgeState { kOff, kOn, kAlmostOn, kOther };

const char* EdgeStateName(EdgeState s);

// Roles around a matched edge: x is the single neighbor of v, y the single
// neighbor of u, and ident(x) < ident(y).
struct EdgeRoles {
  NodeId v;
  NodeId u;
  NodeId x;
  NodeId y;
};

// Throws NotMatchedEdge, or AmbiguousSingleNeighbor when an endpoint does
// not have exactly one single neighbor.
EdgeRoles ResolveRoles(const Graph& g, Edge e);

EdgeState ClassifyEdge(const Graph& g, const Configuration& c, Edge e);

// p_u = p_v = p_x = null; the Off condition without the one on p_y.
bool LocallyOff(const Graph& g, const Configuration& c, Edge e);

// 1 for On, 0 for Off, nullopt otherwise. Throws IndexOutOfRange.
std::optional<int> DecodeBit(const GnInstance& gn, const Configuration& c, int i);

std::optional<std::uint64_t> DecodeOmega(const GnInstance& gn,
                                         const Configuration& c);

}  // namespace mplus

#endif  // MPLUS_GN_H_
