// Copyright 2026 The gamesep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamesep/json_io.hpp"

#include <cmath>

#include "gamesep/errors.hpp"

namespace gamesep {
namespace {

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

int IntFrom(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

int NodeCount(const Json& j) { return IntFrom(Field(j, "nodes"), "\"nodes\""); }

NodeSet NodeSetFrom(const Json& j) {
  if (!j.is_array()) throw ParseError("node set must be an array");
  NodeSet s;
  for (const auto& v : j) {
    const int node = IntFrom(v, "node");
    if (node < 0 || node >= NodeSet::kMaxNodes)
      throw ParseError("node id out of range: " + std::to_string(node));
    s = s.with(node);
  }
  return s;
}

std::vector<int> ActionCounts(const Json& j) {
  const Json& a = Field(j, "actions");
  if (!a.is_array() || a.empty())
    throw ParseError("\"actions\" must be a nonempty array");
  std::vector<int> out;
  for (const auto& v : a) out.push_back(IntFrom(v, "action count"));
  return out;
}

template <typename Scalar>
Game<Scalar> GameFromJsonAs(const Json& j, const SizeLimits& limits) {
  StrategySpace space(ActionCounts(j), limits);
  const Json& tables = Field(j, "utilities");
  if (!tables.is_array() ||
      static_cast<int>(tables.size()) != space.num_players())
    throw ParseError("\"utilities\" must hold one table per player");
  std::vector<Vector<Scalar>> utilities;
  for (const auto& t : tables) {
    Vector<Scalar> table = TableFromJson<Scalar>(t);
    if (table.size() != space.num_profiles())
      throw ParseError("utility table length must equal |X| = " +
                       std::to_string(space.num_profiles()));
    utilities.push_back(std::move(table));
  }
  return Game<Scalar>(std::move(space), std::move(utilities));
}

}  // namespace

Json ToJson(NodeSet s) {
  Json out = Json::array();
  s.ForEach([&](int v) { out.push_back(v); });
  return out;
}

Json ToJson(const DiGraph& g) {
  Json links = Json::array();
  for (const auto& [i, j] : g.links()) links.push_back({i, j});
  return Json{{"nodes", g.node_count()}, {"links", std::move(links)}};
}

Json ToJson(const HGraph& h) {
  Json links = Json::array();
  for (NodeSet s : h.hyperlinks()) links.push_back(ToJson(s));
  return Json{{"nodes", h.node_count()}, {"hyperlinks", std::move(links)}};
}

Json ToJson(const FdhGraph& f) {
  Json links = Json::array();
  for (const auto& d : f.hyperlinks())
    links.push_back(Json{{"tail", d.tail}, {"head", ToJson(d.head)}});
  return Json{{"nodes", f.node_count()}, {"hyperlinks", std::move(links)}};
}

DiGraph DiGraphFromJson(const Json& j) {
  const Json& links = Field(j, "links");
  if (!links.is_array()) throw ParseError("\"links\" must be an array");
  std::set<DiGraph::Link> out;
  for (const auto& l : links) {
    if (!l.is_array() || l.size() != 2)
      throw ParseError("each link must be a pair [i, j]");
    out.insert({IntFrom(l[0], "link end"), IntFrom(l[1], "link end")});
  }
  try {
    return DiGraph(NodeCount(j), std::move(out));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

HGraph HGraphFromJson(const Json& j) {
  const Json& links = Field(j, "hyperlinks");
  if (!links.is_array()) throw ParseError("\"hyperlinks\" must be an array");
  std::set<NodeSet> out;
  for (const auto& l : links) out.insert(NodeSetFrom(l));
  try {
    return HGraph(NodeCount(j), std::move(out));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

FdhGraph FdhGraphFromJson(const Json& j) {
  const Json& links = Field(j, "hyperlinks");
  if (!links.is_array()) throw ParseError("\"hyperlinks\" must be an array");
  std::set<DirectedHyperlink> out;
  for (const auto& l : links)
    out.insert({IntFrom(Field(l, "tail"), "\"tail\""),
                NodeSetFrom(Field(l, "head"))});
  try {
    return FdhGraph(NodeCount(j), std::move(out));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json ScalarToJson(double v) { return v; }
Json ScalarToJson(const Rational& v) { return FormatRational(v); }

template <>
Rational ScalarFromJson<Rational>(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_float())
    throw ParseError("float literal in exact mode: " + j.dump());
  throw ParseError("expected a rational literal, got " + j.dump());
}

template <>
double ScalarFromJson<double>(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return ParseDouble(j.get<std::string>());
  throw ParseError("expected a number, got " + j.dump());
}

template <typename Scalar>
Json TableToJson(const Vector<Scalar>& t) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < t.size(); ++k) out.push_back(ScalarToJson(t(k)));
  return out;
}

template <typename Scalar>
Vector<Scalar> TableFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("table must be an array");
  Vector<Scalar> out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k)
    out(static_cast<Eigen::Index>(k)) = ScalarFromJson<Scalar>(j[k]);
  return out;
}

template <typename Scalar>
Json ToJson(const Game<Scalar>& u) {
  Json tables = Json::array();
  for (const auto& t : u.utilities()) tables.push_back(TableToJson(t));
  return Json{{"actions", u.space().action_counts()},
              {"scalar", ScalarTraits<Scalar>::kName},
              {"utilities", std::move(tables)}};
}

AnyGame GameFromJson(const Json& j, const SizeLimits& limits) {
  std::string mode = "rational";
  if (j.is_object() && j.contains("scalar")) {
    if (!j["scalar"].is_string())
      throw ParseError("\"scalar\" must be \"rational\" or \"float\"");
    mode = j["scalar"].get<std::string>();
  }
  if (mode == "rational") return GameFromJsonAs<Rational>(j, limits);
  if (mode == "float") return GameFromJsonAs<double>(j, limits);
  throw ParseError("unknown scalar mode \"" + mode + "\"");
}

template <typename Scalar>
Json ToJson(const FdhTerms<Scalar>& terms) {
  Json list = Json::array();
  for (const auto& [d, table] : terms.terms)
    list.push_back(Json{{"hyperlink", {{"tail", d.tail}, {"head", ToJson(d.head)}}},
                        {"players", ToJson(d.head.with(d.tail))},
                        {"term", TableToJson(table)}});
  Json own = Json::array();
  for (const auto& t : terms.own) own.push_back(TableToJson(t));
  Json rest = Json::array();
  for (const auto& t : terms.nonstrategic) rest.push_back(TableToJson(t));
  return Json{{"terms", std::move(list)},
              {"own", std::move(own)},
              {"residual_nonstrategic", std::move(rest)}};
}

LoadedDistribution DistributionFromJson(const Json& j,
                                        const SizeLimits& limits) {
  StrategySpace space(ActionCounts(j), limits);
  Vector<double> p = TableFromJson<double>(Field(j, "probabilities"));
  if (p.size() != space.num_profiles())
    throw ParseError("probability table length must equal |X| = " +
                     std::to_string(space.num_profiles()));
  for (Eigen::Index x = 0; x < p.size(); ++x)
    if (!(p(x) > 0.0))
      throw ParseError("probabilities must be strictly positive");
  const bool renormalize = std::abs(p.sum() - 1.0) > kMarkovTolerance;
  try {
    if (renormalize)
      return {DistributionTable::Normalized(std::move(space), std::move(p)),
              true};
    return {DistributionTable(std::move(space), std::move(p)), false};
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json ToJson(const DistributionTable& p) {
  return Json{{"actions", p.space().action_counts()},
              {"probabilities", TableToJson(p.probabilities())}};
}

Json FactorsToJson(const std::map<NodeSet, Vector<double>>& factors) {
  Json list = Json::array();
  for (const auto& [c, t] : factors)
    list.push_back(Json{{"clique", ToJson(c)}, {"table", TableToJson(t)}});
  return Json{{"factors", std::move(list)}};
}

template Json TableToJson(const Vector<double>&);
template Json TableToJson(const Vector<Rational>&);
template Vector<double> TableFromJson(const Json&);
template Vector<Rational> TableFromJson(const Json&);
template Json ToJson(const Game<double>&);
template Json ToJson(const Game<Rational>&);
template Json ToJson(const FdhTerms<double>&);
template Json ToJson(const FdhTerms<Rational>&);

}  // namespace gamesep
