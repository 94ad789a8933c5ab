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

#ifndef MPLUS_ORACLE_H_
#define MPLUS_ORACLE_H_

#include <cstddef>
#include <span>

#include "mplus/graph.h"
#include "mplus/rules.h"

namespace mplus {

// Brute-force checks for small graphs. MaximumMatchingSize and the two
// matching predicates read only the topology; they never consult the rules.

inline constexpr std::size_t kMaxOracleEdges = 40;

// Exact maximum matching cardinality by edge in/out branching with a
// free-vertex bound. Throws TooLarge above kMaxOracleEdges edges.
std::size_t MaximumMatchingSize(const Graph& g);

// Throws NotAMatching unless mm is a vertex-disjoint subset of E.
bool IsMaximalMatching(const Graph& g, std::span<const Edge> mm);

// A matched edge (u,v) with distinct unmatched y in N(u), x in N(v).
bool HasThreeAugmentingPath(const Graph& g, std::span<const Edge> mm);

struct VerificationReport {
  std::size_t matching_size = 0;
  std::size_t maximum_size = 0;
  bool is_maximal = false;
  bool has_3_aug_path = false;
  bool ratio_ok = false;

  bool passed() const { return is_maximal && !has_3_aug_path && ratio_ok; }
};

// Extracts the matching of a stable configuration and runs every check.
// Throws NotStable or TooLarge.
VerificationReport VerifyStable(const Graph& g, const Configuration& c);

}  // namespace mplus

#endif  // MPLUS_ORACLE_H_
