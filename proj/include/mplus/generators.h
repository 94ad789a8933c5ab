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

#ifndef MPLUS_GENERATORS_H_
#define MPLUS_GENERATORS_H_

#include "mplus/graph.h"
#include "mplus/rng.h"
#include "mplus/rules.h"

namespace mplus {

// G(n, edge_prob) with distinct identifiers drawn from 1..10n and the greedy
// maximal matching as M.
Graph RandomGraph(int n, double edge_prob, Rng& rng);

// Arbitrary local states. p, alpha and beta are each drawn uniformly from
// N(v) + {null} + {one random non-neighbor, when one exists}; s is a coin.
Configuration RandomConfiguration(const Graph& g, Rng& rng);

}  // namespace mplus

#endif  // MPLUS_GENERATORS_H_
