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

#include "mplus/generators.h"

#include <algorithm>
#include <vector>

namespace mplus {

Graph RandomGraph(int n, double edge_prob, Rng& rng) {
  std::vector<Identifier> ids;
  // Partial Fisher-Yates over 1..10n.
  std::vector<std::int64_t> pool(static_cast<std::size_t>(10 * n));
  for (std::size_t k = 0; k < pool.size(); ++k) pool[k] = static_cast<std::int64_t>(k) + 1;
  for (int k = 0; k < n; ++k) {
    const std::size_t pick = k + rng.Below(pool.size() - k);
    std::swap(pool[k], pool[pick]);
    ids.push_back(Identifier{pool[k]});
  }
  std::vector<IdentPair> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.Bernoulli(edge_prob)) edges.emplace_back(ids[a], ids[b]);
    }
  }
  auto matching = GreedyMaximalMatching(ids, edges);
  return Graph::Build(std::move(ids), std::move(edges), std::move(matching));
}

Configuration RandomConfiguration(const Graph& g, Rng& rng) {
  Configuration c(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    const NodeId v{i};
    std::vector<NodeId> outsiders;
    for (std::uint32_t k = 0; k < g.size(); ++k) {
      const NodeId w{k};
      if (w != v && !g.adjacent(v, w)) outsiders.push_back(w);
    }
    std::vector<MaybeNode> choices(g.neighbors(v).begin(), g.neighbors(v).end());
    choices.push_back(std::nullopt);
    if (!outsiders.empty()) choices.push_back(outsiders[rng.Below(outsiders.size())]);

    LocalState& s = c[v];
    s.p = choices[rng.Below(choices.size())];
    s.alpha = choices[rng.Below(choices.size())];
    s.beta = choices[rng.Below(choices.size())];
    s.s = rng.Bernoulli(0.5);
  }
  return c;
}

}  // namespace mplus
