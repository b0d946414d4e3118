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

#include <doctest.h>

#include "gamesep/errors.hpp"
#include "gamesep/gamegen.hpp"
#include "gamesep/hypergraph.hpp"
#include "gamesep/random.hpp"
#include "test_util.hpp"

namespace gamesep {
namespace {

using testing::F;
using testing::H;
using testing::Nodes;

TEST_CASE("node set order is lexicographic on sorted members") {
  CHECK(Nodes({0}) < Nodes({0, 1}));
  CHECK(Nodes({0, 1}) < Nodes({0, 2}));
  CHECK(Nodes({0, 5}) < Nodes({1}));
  CHECK(Nodes({1, 2}) < Nodes({1, 2, 3}));
  CHECK(NodeSet() < Nodes({0}));
  CHECK(Nodes({2, 0}).ToString() == "{0,2}");
}

TEST_CASE("simplify h-graphs") {
  CHECK(Simplify(H(3, {{0}, {0, 1}})) == H(3, {{0, 1}}));
  CHECK(Simplify(H(3, {{0, 1}, {1, 2}})) == H(3, {{0, 1}, {1, 2}}));
  CHECK(Simplify(H(3, {{0}, {1}, {0, 1}, {0, 1, 2}})) == H(3, {{0, 1, 2}}));
  CHECK(IsSimple(H(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(IsSimple(H(3, {{0}, {0, 1}})));
}

TEST_CASE("preceq on h-graphs") {
  CHECK(Preceq(H(3, {{0, 1}}), H(3, {{0, 1, 2}})));
  CHECK_FALSE(Preceq(H(3, {{0, 1, 2}}), H(3, {{0, 1}, {1, 2}})));
  CHECK(Preceq(HGraph(3), H(3, {{0}})));
}

TEST_CASE("intersect and union of h-graphs") {
  CHECK(Intersect(H(4, {{0, 1, 2}}), H(4, {{1, 2, 3}})) == H(4, {{1, 2}}));
  CHECK(Intersect(H(4, {{0, 1}}), H(4, {{2, 3}})).empty());
  const HGraph h = H(4, {{0, 1}, {1, 2, 3}});
  for (NodeSet j : h.hyperlinks())
    CHECK(Intersect(h, h).hyperlinks().contains(j));
  CHECK(Union(H(2, {{0}}), H(2, {{1}})) == H(2, {{0}, {1}}));
  CHECK(Union(h, h) == h);
  CHECK(Union(HGraph(2), H(2, {{0, 1}})) == H(2, {{0, 1}}));
}

TEST_CASE("fdh simplify, preceq and intersect") {
  CHECK(Simplify(F(3, {{0, {1}}, {0, {1, 2}}})) == F(3, {{0, {1, 2}}}));
  CHECK(Preceq(F(3, {{0, {1}}}), F(3, {{0, {1, 2}}})));
  CHECK_FALSE(Preceq(F(3, {{1, {0}}}), F(3, {{0, {1, 2}}})));
  CHECK(Intersect(F(4, {{0, {1, 2}}}), F(4, {{0, {2, 3}}})) ==
        F(4, {{0, {2}}}));
}

TEST_CASE("graph and fdh conversions") {
  CHECK(FdhFromGraph(RingGraph(3)) ==
        F(3, {{0, {1, 2}}, {1, {0, 2}}, {2, {0, 1}}}));
  CHECK(FdhFromGraph(DiGraph(3, {{0, 1}})) == F(3, {{0, {1}}}));
  CHECK(FdhFromGraph(EmptyGraph(3)).empty());
  CHECK(GraphFromFdh(F(3, {{0, {1, 2}}})) == DiGraph(3, {{0, 1}, {0, 2}}));
  CHECK(GraphFromFdh(FdhGraph(3)).links().empty());
  CHECK(FdhFromHGraph(H(3, {{0, 1, 2}})) ==
        F(3, {{0, {1, 2}}, {1, {0, 2}}, {2, {0, 1}}}));
  CHECK(FdhFromHGraph(H(3, {{1}})).empty());
  CHECK(HGraphFromFdh(F(2, {{0, {1}}})) == H(2, {{0, 1}}));
  CHECK(UnderlyingUndirected(F(3, {{0, {1, 2}}})) ==
        F(3, {{0, {1, 2}}, {1, {0, 2}}, {2, {0, 1}}}));
  const FdhGraph u = FdhFromHGraph(H(4, {{0, 1}, {1, 2, 3}}));
  CHECK(UnderlyingUndirected(u) == u);
  CHECK(IsUndirected(u));
  CHECK_FALSE(IsUndirected(F(2, {{0, {1}}})));
}

TEST_CASE("local h-graph includes the opponents-only hyperlink") {
  const FdhGraph f = F(4, {{0, {1}}, {0, {2, 3}}, {1, {0}}});
  CHECK(LocalHGraph(f, 0) == H(4, {{0, 1}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(LocalHGraph(f, 3) == H(4, {{0, 1, 2}}));
  CHECK(LocalHGraph(FdhGraph(1), 0).empty());
}

TEST_CASE("maximal cliques") {
  CHECK(MaximalCliques(CompleteGraph(3)) == H(3, {{0, 1, 2}}));
  CHECK(MaximalCliques(LineGraph(3)) == H(3, {{0, 1}, {1, 2}}));
  CHECK(MaximalCliques(RingGraph(4)) ==
        H(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(MaximalCliques(EmptyGraph(2)) == H(2, {{0}, {1}}));
  CHECK_THROWS_AS(MaximalCliques(DiGraph(2, {{0, 1}})), InvalidArgument);
  CHECK_THROWS_AS(MaximalCliques(EmptyGraph(25)), SizeLimitExceeded);
}

TEST_CASE("constructors validate") {
  CHECK_THROWS_AS(DiGraph(2, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(DiGraph(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(HGraph(2, {NodeSet()}), InvalidArgument);
  CHECK_THROWS_AS(HGraph(2, {Nodes({2})}), InvalidArgument);
  CHECK_THROWS_AS(F(2, {{0, {0}}}), InvalidArgument);
  CHECK_THROWS_AS(FdhGraph(2, {{0, NodeSet()}}), InvalidArgument);
  CHECK_THROWS_AS(RingGraph(2), InvalidArgument);
  CHECK_THROWS_AS(DiGraph(0), InvalidArgument);
}

// Random structures over five nodes.
HGraph RandomH(SplitMix64& rng) {
  return RandomHGraph(5, static_cast<int>(rng.UniformInt(0, 4)), 4, rng);
}
FdhGraph RandomF(SplitMix64& rng) {
  return RandomFdhGraph(5, static_cast<int>(rng.UniformInt(0, 2)), 3, rng);
}
DiGraph RandomUndirected(int n, SplitMix64& rng) {
  std::set<DiGraph::Link> links;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.Bernoulli(0.5)) {
        links.insert({i, j});
        links.insert({j, i});
      }
  return DiGraph(n, links);
}

TEST_CASE("property: simplify laws") {
  SplitMix64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const HGraph h = RandomH(rng), g = RandomH(rng);
    CHECK(Simplify(Simplify(h)) == Simplify(h));
    CHECK(Preceq(h, Simplify(h)));
    CHECK(Preceq(Simplify(h), h));
    CHECK(Preceq(h, g) == Preceq(Simplify(h), Simplify(g)));
    const FdhGraph f = RandomF(rng);
    CHECK(Simplify(Simplify(f)) == Simplify(f));
    CHECK(Preceq(f, Simplify(f)));
    CHECK(Preceq(Simplify(f), f));
  }
}

TEST_CASE("property: fdh intersect is the greatest lower bound") {
  SplitMix64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const FdhGraph a = Simplify(RandomF(rng)), b = Simplify(RandomF(rng));
    const FdhGraph m = Intersect(a, b);
    CHECK(Preceq(m, a));
    CHECK(Preceq(m, b));
    const FdhGraph c = RandomF(rng);
    if (Preceq(c, a) && Preceq(c, b)) CHECK(Preceq(c, m));
    // Any intersection of the two is below m.
    CHECK(Preceq(Intersect(Intersect(a, b), c), m));
  }
}

TEST_CASE("property: conversion laws") {
  SplitMix64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const FdhGraph f = RandomF(rng);
    CHECK(Preceq(f, FdhFromGraph(GraphFromFdh(f))));
    CHECK(Preceq(f, UnderlyingUndirected(f)));
    const FdhGraph u = UnderlyingUndirected(f);
    for (const auto& d : u.hyperlinks())
      d.head.ForEach([&](int j) {
        CHECK(u.hyperlinks().contains({j, d.head.without(j).with(d.tail)}));
      });
    std::set<DiGraph::Link> links;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j && rng.Bernoulli(0.3)) links.insert({i, j});
    const DiGraph g(5, links);
    CHECK(GraphFromFdh(FdhFromGraph(g)) == g);
    std::set<NodeSet> big;
    const HGraph drawn = RandomH(rng);
    for (NodeSet j : drawn.hyperlinks())
      if (j.size() >= 2) big.insert(j);
    const HGraph h(5, big);
    CHECK(HGraphFromFdh(FdhFromHGraph(h)) == h);
  }
}

TEST_CASE("property: cliques match subset enumeration") {
  SplitMix64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.UniformInt(1, 8));
    const DiGraph g = RandomUndirected(n, rng);
    CHECK(MaximalCliques(g) == testing::BruteMaximalCliques(g));
  }
}

}  // namespace
}  // namespace gamesep
