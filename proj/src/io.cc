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

#include "mplus/io.h"

#include <fstream>
#include <sstream>

#include "mplus/error.h"

namespace mplus {
namespace {

std::int64_t Id(const Graph& g, NodeId v) { return g.ident(v).value; }

Json MaybeId(const Graph& g, const MaybeNode& v) {
  return v ? Json(Id(g, *v)) : Json(nullptr);
}

std::vector<IdentPair> PairsFromJson(const Json& j, const char* key) {
  std::vector<IdentPair> out;
  if (!j.contains(key)) return out;
  for (const auto& pair : j.at(key)) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::kParseError, std::string(key) + ": expected [id,id]");
    }
    out.emplace_back(Identifier{pair[0].get<std::int64_t>()},
                     Identifier{pair[1].get<std::int64_t>()});
  }
  return out;
}

template <typename Fn>
auto Parsing(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

NodeId ParseNodeKey(const Graph& g, const std::string& key) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) {
    throw Error(ErrorCode::kParseError, "bad node key '" + key + "'");
  }
  return g.at(Identifier{value});
}

MaybeNode ParseMaybeNode(const Graph& g, const Json& value) {
  if (value.is_null()) return std::nullopt;
  return g.at(Identifier{value.get<std::int64_t>()});
}

}  // namespace

Json GraphToJson(const Graph& g) {
  Json j;
  Json nodes = Json::array();
  for (NodeId v : g.by_ident()) nodes.push_back({{"id", Id(g, v)}});
  j["nodes"] = std::move(nodes);
  j["edges"] = EdgesToJson(g, g.edges());
  j["matching"] = EdgesToJson(g, g.matching());
  return j;
}

Graph GraphFromJson(const Json& j) {
  return Parsing("graph", [&] {
    std::vector<Identifier> ids;
    for (const auto& node : j.at("nodes")) {
      ids.push_back(Identifier{node.at("id").get<std::int64_t>()});
    }
    return Graph::Build(std::move(ids), PairsFromJson(j, "edges"),
                        PairsFromJson(j, "matching"));
  });
}

Json ConfigToJson(const Graph& g, const Configuration& c) {
  Json p = Json::object(), alpha = Json::object(), beta = Json::object(),
       s = Json::object();
  for (NodeId v : g.by_ident()) {
    const std::string key = std::to_string(Id(g, v));
    p[key] = MaybeId(g, c[v].p);
    alpha[key] = MaybeId(g, c[v].alpha);
    beta[key] = MaybeId(g, c[v].beta);
    s[key] = c[v].s;
  }
  Json j;
  j["p"] = std::move(p);
  j["alpha"] = std::move(alpha);
  j["beta"] = std::move(beta);
  j["s"] = std::move(s);
  return j;
}

Configuration ConfigFromJson(const Graph& g, const Json& j) {
  return Parsing("configuration", [&] {
    Configuration c(g.size());
    auto each = [&](const char* key, auto&& assign) {
      if (!j.contains(key)) return;
      for (const auto& [name, value] : j.at(key).items()) {
        assign(c[ParseNodeKey(g, name)], value);
      }
    };
    each("p", [&](LocalState& st, const Json& v) { st.p = ParseMaybeNode(g, v); });
    each("alpha", [&](LocalState& st, const Json& v) { st.alpha = ParseMaybeNode(g, v); });
    each("beta", [&](LocalState& st, const Json& v) { st.beta = ParseMaybeNode(g, v); });
    each("s", [&](LocalState& st, const Json& v) { st.s = v.get<bool>(); });
    return c;
  });
}

Json TraceToJson(const Graph& g, const Trace& t) {
  Json steps = Json::array();
  for (const MoveSet& step : t.steps) {
    Json moves = Json::array();
    for (const Move& m : step) {
      moves.push_back({{"node", Id(g, m.node)}, {"rule", RuleName(m.rule)}});
    }
    steps.push_back(std::move(moves));
  }
  Json j;
  j["initial"] = ConfigToJson(g, t.initial);
  j["steps"] = std::move(steps);
  j["move_count"] = t.move_count;
  j["stabilized"] = t.stabilized;
  return j;
}

Trace TraceFromJson(const Graph& g, const Json& j) {
  Trace t = Parsing("trace", [&] {
    Trace out;
    out.initial = ConfigFromJson(g, j.at("initial"));
    for (const auto& step : j.at("steps")) {
      MoveSet moves;
      for (const auto& m : step) {
        const auto name = m.at("rule").get<std::string>();
        const auto rule = ParseRuleName(name);
        if (!rule) throw Error(ErrorCode::kParseError, "unknown rule '" + name + "'");
        moves.push_back({g.at(Identifier{m.at("node").get<std::int64_t>()}), *rule});
      }
      out.steps.push_back(std::move(moves));
    }
    out.move_count = j.at("move_count").get<std::uint64_t>();
    out.stabilized = j.at("stabilized").get<bool>();
    return out;
  });
  t.final_config = Replay(g, t);
  return t;
}

Json EdgesToJson(const Graph& g, const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) {
    const auto lo = std::min(Id(g, e.a), Id(g, e.b));
    const auto hi = std::max(Id(g, e.a), Id(g, e.b));
    out.push_back({lo, hi});
  }
  return out;
}

Json VerificationToJson(const VerificationReport& r) {
  Json j;
  j["matching_size"] = r.matching_size;
  j["maximum_size"] = r.maximum_size;
  j["is_maximal"] = r.is_maximal;
  j["has_3_aug_path"] = r.has_3_aug_path;
  j["ratio_ok"] = r.ratio_ok;
  j["passed"] = r.passed();
  return j;
}

std::vector<std::pair<NodeId, NodeId>> PointerArcs(const Graph& g,
                                                   const Configuration& c) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (NodeId v : g.by_ident()) {
    if (c[v].p) arcs.emplace_back(v, *c[v].p);
  }
  return arcs;
}

std::string ExportDot(const Graph& g, const Configuration& c) {
  std::ostringstream out;
  out << "digraph mplus {\n";
  for (NodeId v : g.by_ident()) {
    out << "  n" << Id(g, v) << " [label=\"" << Id(g, v) << "\""
        << (g.is_single(v) ? ", shape=circle" : ", shape=doublecircle") << "];\n";
  }
  for (const Edge& e : g.edges()) {
    const bool matched = g.mate(e.a) == e.b;
    out << "  n" << std::min(Id(g, e.a), Id(g, e.b)) << " -> n"
        << std::max(Id(g, e.a), Id(g, e.b)) << " [dir=none"
        << (matched ? ", style=bold, penwidth=3" : ", color=gray") << "];\n";
  }
  for (const auto& [from, to] : PointerArcs(g, c)) {
    out << "  n" << Id(g, from) << " -> n" << Id(g, to)
        << " [class=\"p\", color=blue, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return Parsing(path.c_str(), [&] { return Json::parse(in); });
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace mplus
