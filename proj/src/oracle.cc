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

#include "mplus/oracle.h"

#include <string>
#include <vector>

#include "mplus/engine.h"
#include "mplus/error.h"

namespace mplus {
namespace {

class MaxMatchingSearch {
 public:
  explicit MaxMatchingSearch(const Graph& g)
      : edges_(g.edges()), used_(g.size(), false), free_(g.size()) {}

  std::size_t Solve() {
    Branch(0, 0);
    return best_;
  }

 private:
  void Branch(std::size_t next, std::size_t taken) {
    if (taken > best_) best_ = taken;
    if (next == edges_.size()) return;
    if (taken + free_ / 2 <= best_) return;
    const Edge& e = edges_[next];
    if (!used_[e.a.index] && !used_[e.b.index]) {
      used_[e.a.index] = used_[e.b.index] = true;
      free_ -= 2;
      Branch(next + 1, taken + 1);
      used_[e.a.index] = used_[e.b.index] = false;
      free_ += 2;
    }
    Branch(next + 1, taken);
  }

  const std::vector<Edge>& edges_;
  std::vector<bool> used_;
  std::size_t free_;
  std::size_t best_ = 0;
};

// Partner per node, validating mm on the way.
std::vector<MaybeNode> Partners(const Graph& g, std::span<const Edge> mm) {
  std::vector<MaybeNode> partner(g.size());
  for (const Edge& e : mm) {
    if (!g.contains(e.a) || !g.contains(e.b) || !g.adjacent(e.a, e.b)) {
      throw Error(ErrorCode::kNotAMatching, "pair is not an edge");
    }
    if (partner[e.a.index] || partner[e.b.index]) {
      throw Error(ErrorCode::kNotAMatching,
                  "node " + std::to_string(g.ident(partner[e.a.index] ? e.a : e.b).value) +
                      " is covered twice");
    }
    partner[e.a.index] = e.b;
    partner[e.b.index] = e.a;
  }
  return partner;
}

}  // namespace

std::size_t MaximumMatchingSize(const Graph& g) {
  if (g.edge_count() > kMaxOracleEdges) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.edge_count()) + " edges exceed the oracle bound");
  }
  return MaxMatchingSearch(g).Solve();
}

bool IsMaximalMatching(const Graph& g, std::span<const Edge> mm) {
  const auto partner = Partners(g, mm);
  for (const Edge& e : g.edges()) {
    if (!partner[e.a.index] && !partner[e.b.index]) return false;
  }
  return true;
}

bool HasThreeAugmentingPath(const Graph& g, std::span<const Edge> mm) {
  const auto partner = Partners(g, mm);
  for (const Edge& e : mm) {
    for (NodeId y : g.neighbors(e.a)) {
      if (partner[y.index]) continue;
      for (NodeId x : g.neighbors(e.b)) {
        if (!partner[x.index] && x != y) return true;
      }
    }
  }
  return false;
}

VerificationReport VerifyStable(const Graph& g, const Configuration& c) {
  if (!IsStable(g, c)) throw Error(ErrorCode::kNotStable, "configuration has enabled nodes");
  const auto mm = ExtractMatching(g, c);
  VerificationReport r;
  r.matching_size = mm.size();
  r.maximum_size = MaximumMatchingSize(g);
  r.is_maximal = IsMaximalMatching(g, mm);
  r.has_3_aug_path = HasThreeAugmentingPath(g, mm);
  r.ratio_ok = 3 * r.matching_size >= 2 * r.maximum_size;
  return r;
}

}  // namespace mplus
