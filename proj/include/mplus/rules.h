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

#ifndef MPLUS_RULES_H_
#define MPLUS_RULES_H_

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mplus/graph.h"

namespace mplus {

// Local variables of one node. Any combination of values is representable:
// p, alpha and beta may name arbitrary nodes, including non-neighbors.
struct LocalState {
  MaybeNode p;
  MaybeNode alpha;
  MaybeNode beta;
  bool s = false;

  friend bool operator==(const LocalState&, const LocalState&) = default;
};

// Local states of every node of one graph, indexed by NodeId.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t n) : states_(n) {}

  std::size_t size() const { return states_.size(); }
  const LocalState& operator[](NodeId v) const { return states_[v.index]; }
  LocalState& operator[](NodeId v) { return states_[v.index]; }
  std::span<const LocalState> states() const { return states_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<LocalState> states_;
};

enum class RuleKind : std::uint8_t {
  kSingleNode,
  kUpdate,
  kMatchFirst,
  kMatchSecond,
  kResetMatch,
};

inline constexpr std::array<RuleKind, 5> kAllRules = {
    RuleKind::kSingleNode, RuleKind::kUpdate, RuleKind::kMatchFirst,
    RuleKind::kMatchSecond, RuleKind::kResetMatch};

std::string_view RuleName(RuleKind r);
std::optional<RuleKind> ParseRuleName(std::string_view name);

// Small bit set over RuleKind.
class RuleSet {
 public:
  constexpr RuleSet() = default;

  constexpr bool contains(RuleKind r) const { return bits_ & Bit(r); }
  constexpr void insert(RuleKind r) { bits_ |= Bit(r); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  std::vector<RuleKind> to_vector() const {
    std::vector<RuleKind> out;
    for (RuleKind r : kAllRules) {
      if (contains(r)) out.push_back(r);
    }
    return out;
  }

  friend constexpr bool operator==(RuleSet, RuleSet) = default;

 private:
  static constexpr std::uint8_t Bit(RuleKind r) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }
  std::uint8_t bits_ = 0;
};

// Member with the smallest identifier, or nullopt for an empty range.
MaybeNode Lowest(const Graph& g, std::span<const NodeId> nodes);

// Number of distinct non-null values. Nulls are not counted.
int UniqueNonNull(std::span<const MaybeNode> values);

// Two lowest-identifier single neighbors u of v with p_u in {null, v}.
// Requires v to be matched.
std::pair<MaybeNode, MaybeNode> BestRematch(const Graph& g,
                                            const Configuration& c, NodeId v);

// Requires u == m_v.
MaybeNode AskFirst(const Graph& g, const Configuration& c, NodeId v, NodeId u);
MaybeNode AskSecond(const Graph& g, const Configuration& c, NodeId v, NodeId u);

// Lowest-identifier neighbor u of v with p_u == v.
MaybeNode LowestProposer(const Graph& g, const Configuration& c, NodeId v);

// p_{p_v} == v, where the dereference only happens when p_v is a neighbor
// of v; any other p_v yields false.
bool PointsBack(const Graph& g, const Configuration& c, NodeId v);

RuleSet EnabledRules(const Graph& g, const Configuration& c, NodeId v);

// Runs the command of r for v against c, without checking the guard.
// Assignments inside a command are sequential: MatchFirst computes s_v
// after p_v has been set.
LocalState NextState(const Graph& g, const Configuration& c, NodeId v,
                     RuleKind r);

// Guarded application; throws RuleNotEnabled when r is not enabled.
Configuration ApplyRule(const Graph& g, const Configuration& c, NodeId v,
                        RuleKind r);

// {v,u} is in the result iff (p_v = u and p_u = v) or
// (p_v = p_u = null and (v,u) in M). Sorted like Graph::edges().
std::vector<Edge> ExtractMatching(const Graph& g, const Configuration& c);

}  // namespace mplus

#endif  // MPLUS_RULES_H_
