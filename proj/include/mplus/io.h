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

#ifndef MPLUS_IO_H_
#define MPLUS_IO_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mplus/adversary.h"
#include "mplus/engine.h"
#include "mplus/graph.h"
#include "mplus/oracle.h"
#include "mplus/rules.h"

namespace mplus {

// Insertion-ordered so that emitted documents follow a fixed key order.
using Json = nlohmann::ordered_json;

// {"nodes":[{"id":int}], "edges":[[id,id]], "matching":[[id,id]]}
Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

// {"p":{id:id|null}, "alpha":{...}, "beta":{...}, "s":{id:bool}}, keyed by
// identifier. Nodes missing from a map default to null / false.
Json ConfigToJson(const Graph& g, const Configuration& c);
Configuration ConfigFromJson(const Graph& g, const Json& j);

// {"initial":<config>, "steps":[[{"node":id,"rule":name}]], "move_count":n,
//  "stabilized":bool}
Json TraceToJson(const Graph& g, const Trace& t);
// Rebuilds the trace and recomputes final_config by replay.
Trace TraceFromJson(const Graph& g, const Json& j);

Json EdgesToJson(const Graph& g, const std::vector<Edge>& edges);
Json VerificationToJson(const VerificationReport& r);

// Non-null p values as (from, to) arcs, sorted by the identifier of from.
std::vector<std::pair<NodeId, NodeId>> PointerArcs(const Graph& g,
                                                   const Configuration& c);

// Graphviz rendering: one node per vertex labeled by identifier, topology
// edges undirected (matched ones bold), one directed arc per non-null p
// tagged class="p". Output is fully determined by (g, c).
std::string ExportDot(const Graph& g, const Configuration& c);

Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace mplus

#endif  // MPLUS_IO_H_
