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

// JSON encodings.
//
//   DiGraph       {"nodes": n, "links": [[i, j], ...]}
//   HGraph        {"nodes": n, "hyperlinks": [[i, ...], ...]}
//   FdhGraph      {"nodes": n, "hyperlinks": [{"tail": i, "head": [j, ...]}]}
//   Game          {"actions": [k_0, ...], "scalar": "rational" | "float",
//                  "utilities": [[player-0 table], ...]}
//   Distribution  {"actions": [k_0, ...], "probabilities": [p, ...]}
//
// Tables are in profile-index order (player 0 most significant). Rational
// entries are written as strings "p" or "p/q"; on input, rational games accept
// such strings and JSON integers and reject JSON floats.

#ifndef GAMESEP_JSON_IO_HPP_
#define GAMESEP_JSON_IO_HPP_

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "gamesep/decomposition.hpp"
#include "gamesep/game.hpp"
#include "gamesep/hypergraph.hpp"
#include "gamesep/mrf.hpp"
#include "gamesep/separability.hpp"

namespace gamesep {

using Json = nlohmann::ordered_json;

Json ToJson(const DiGraph& g);
Json ToJson(const HGraph& h);
Json ToJson(const FdhGraph& f);
Json ToJson(NodeSet s);

// Throw ParseError on schema violations.
DiGraph DiGraphFromJson(const Json& j);
HGraph HGraphFromJson(const Json& j);
FdhGraph FdhGraphFromJson(const Json& j);

Json ScalarToJson(double v);
Json ScalarToJson(const Rational& v);

template <typename Scalar>
Scalar ScalarFromJson(const Json& j);
template <>
Rational ScalarFromJson<Rational>(const Json& j);
template <>
double ScalarFromJson<double>(const Json& j);

template <typename Scalar>
Json TableToJson(const Vector<Scalar>& t);

template <typename Scalar>
Vector<Scalar> TableFromJson(const Json& j);

template <typename Scalar>
Json ToJson(const Game<Scalar>& u);

using AnyGame = std::variant<Game<Rational>, Game<double>>;

// Reads a game in the scalar mode named by its "scalar" field ("rational"
// when absent).
AnyGame GameFromJson(const Json& j, const SizeLimits& limits = {});

// Terms of ExtractFTerms:
//   {"terms": [{"hyperlink": {...}, "players": [...], "term": [...]}],
//    "own": [[...], ...], "residual_nonstrategic": [[...], ...]}
template <typename Scalar>
Json ToJson(const FdhTerms<Scalar>& terms);

struct LoadedDistribution {
  DistributionTable table;
  // The input did not sum to one and was rescaled.
  bool renormalized = false;
};

LoadedDistribution DistributionFromJson(const Json& j,
                                        const SizeLimits& limits = {});
Json ToJson(const DistributionTable& p);

// {"factors": [{"clique": [...], "table": [...]}, ...]}
Json FactorsToJson(const std::map<NodeSet, Vector<double>>& factors);

}  // namespace gamesep

#endif  // GAMESEP_JSON_IO_HPP_
