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
#include "gamesep/separability.hpp"
#include "test_util.hpp"

namespace gamesep {
namespace {

using testing::F;
using testing::H;
using testing::Nodes;
using testing::Q;

Vector<Rational> Binary2(std::function<int(int, int)> fn) {
  return testing::Tabulate<Rational>(StrategySpace::Binary(2),
                                     [&](const Profile& x) {
                                       return Rational(fn(x[0], x[1]));
                                     });
}

TEST_CASE("interaction components of small functions") {
  const StrategySpace sp = StrategySpace::Binary(2);
  const auto add = MobiusDecompose(sp, Binary2([](int a, int b) { return a + b; }));
  CHECK_FALSE(add.IsNonzero(Nodes({0, 1})));
  CHECK(add.component(Nodes({0}))(1) == 1);
  CHECK(add.component(Nodes({1}))(1) == 1);
  CHECK(add.component(Nodes({0, 1})).isZero());

  const auto x = MobiusDecompose(sp, Binary2([](int a, int b) { return a ^ b; }));
  CHECK(x.component(Nodes({0}))(1) == 1);
  CHECK(x.component(Nodes({1}))(1) == 1);
  CHECK(x.component(Nodes({0, 1}))(3) == -2);
  CHECK(x.component(Nodes({0, 1}))(0) == 0);

  const auto c = MobiusDecompose(sp, Binary2([](int, int) { return 5; }));
  CHECK(c.component(NodeSet())(0) == 5);
  CHECK(c.Support().empty());
}

TEST_CASE("minimal h-graphs") {
  const StrategySpace sp = StrategySpace::Binary(4);
  const auto ring = testing::Tabulate<Rational>(sp, [](const Profile& x) {
    Rational s(0);
    for (int i = 0; i < 4; ++i) s += x[i] == x[(i + 1) % 4] ? 1 : -1;
    return s;
  });
  CHECK(MinimalHGraph(sp, ring) == H(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(OracleIsSeparable(sp, ring, H(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK_FALSE(OracleIsSeparable(sp, ring, H(4, {{0}, {1}, {2}, {3}})));

  const StrategySpace s3 = StrategySpace::Binary(3);
  const auto prod = testing::Tabulate<Rational>(
      s3, [](const Profile& x) { return Rational(x[0] * x[1] * x[2]); });
  CHECK(MinimalHGraph(s3, prod) == H(3, {{0, 1, 2}}));
  const auto constant = testing::Tabulate<Rational>(
      s3, [](const Profile&) { return Rational(3); });
  CHECK(MinimalHGraph(s3, constant).empty());
}

TEST_CASE("h-separability") {
  const StrategySpace sp = StrategySpace::Binary(2);
  const auto x = Binary2([](int a, int b) { return a ^ b; });
  CHECK(IsHSeparable(sp, x, HGraph::Trivial(2)));
  CHECK_FALSE(IsHSeparable(sp, x, H(2, {{0}, {1}})));
  CHECK_FALSE(OracleIsSeparable(sp, x, H(2, {{0}, {1}})));
  CHECK(OracleIsSeparable(sp, x, HGraph::Trivial(2)));
  const auto c = Binary2([](int, int) { return 2; });
  CHECK(IsHSeparable(sp, c, HGraph(2)));
  CHECK(OracleIsSeparable(sp, c, HGraph(2)));
  CHECK_THROWS_AS(IsHSeparable(sp, x, HGraph(3)), InvalidArgument);
  CHECK_THROWS_AS(MobiusDecompose(sp, Vector<Rational>(Vector<Rational>::Zero(3))),
                  InvalidArgument);
  CHECK_THROWS_AS(MobiusDecompose(sp, x, SeparabilityOptions{4}),
                  InvalidArgument);
}

TEST_CASE("oracle agrees with interaction test on all 0/1 functions of two bits") {
  const StrategySpace sp = StrategySpace::Binary(2);
  for (int code = 0; code < 16; ++code) {
    Vector<Rational> f(4);
    for (int k = 0; k < 4; ++k) f(k) = (code >> k) & 1;
    for (const HGraph& h : {H(2, {{0}, {1}}), H(2, {{0, 1}})})
      CHECK(IsHSeparable(sp, f, h) == OracleIsSeparable(sp, f, h));
  }
}

TEST_CASE("extracted h-terms resum to f") {
  const StrategySpace sp = StrategySpace::Binary(2);
  const auto add = Binary2([](int a, int b) { return 2 * a + 3 * b; });
  const auto terms = ExtractHTerms(sp, add, H(2, {{0}, {1}}));
  REQUIRE(terms.size() == 2);
  Vector<Rational> sum = Embed(sp, Nodes({0}), terms.at(Nodes({0}))) +
                         Embed(sp, Nodes({1}), terms.at(Nodes({1})));
  CHECK(sum == add);
  CHECK(terms.at(Nodes({0}))(1) - terms.at(Nodes({0}))(0) == 2);

  const StrategySpace s4 = StrategySpace::Binary(4);
  const HGraph edges = H(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  SplitMix64 rng(3);
  const auto phi = PlantedFunction<Rational>(s4, edges, rng);
  Vector<Rational> resum = Vector<Rational>::Zero(16);
  for (const auto& [j, t] : ExtractHTerms(s4, phi, edges))
    resum += Embed(s4, j, t);
  CHECK(resum == phi);

  const auto c = Binary2([](int, int) { return 7; });
  const auto ct = ExtractHTerms(sp, c, H(2, {{0}, {1}}));
  CHECK(ct.at(Nodes({0})) == Vector<Rational>::Constant(2, Rational(7)));
  CHECK(ct.at(Nodes({1})).isZero());
  CHECK_THROWS_AS(ExtractHTerms(sp, Binary2([](int a, int b) { return a * b; }),
                                H(2, {{0}, {1}})),
                  InvalidArgument);
}

TEST_CASE("minimal fdh of the best-shot ring") {
  const auto u = BestShotRing<Rational>(6, Q("1/2"));
  std::set<DirectedHyperlink> d;
  for (int i = 0; i < 6; ++i)
    d.insert({i, Nodes({(i + 5) % 6, (i + 1) % 6})});
  CHECK(MinimalFdh(u) == FdhGraph(6, d));
  CHECK(IsFSeparable(u, MinimalFdh(u)));
  CHECK(OracleIsFSeparable(u, MinimalFdh(u)));
  // Pairwise links to each neighbour separately cannot carry the max term.
  std::set<DirectedHyperlink> pairs;
  for (int i = 0; i < 6; ++i) {
    pairs.insert({i, NodeSet::Singleton((i + 5) % 6)});
    pairs.insert({i, NodeSet::Singleton((i + 1) % 6)});
  }
  CHECK_FALSE(IsFSeparable(u, FdhGraph(6, pairs)));
  CHECK_FALSE(OracleIsFSeparable(u, FdhGraph(6, pairs)));
  CHECK(MinimalGraph(u) == RingGraph(6));
}

// Stated two-level structure: pairwise links to non-neighbours plus one
// hyperlink onto the whole neighbourhood.
FdhGraph TwoLevelShape(const DiGraph& g) {
  const int n = g.node_count();
  std::set<DirectedHyperlink> d;
  for (int i = 0; i < n; ++i) {
    d.insert({i, g.OutNeighbors(i)});
    for (int j = 0; j < n; ++j)
      if (j != i && !g.HasLink(i, j)) d.insert({i, NodeSet::Singleton(j)});
  }
  return FdhGraph(n, d);
}

FdhGraph AllPairs(int n) {
  std::set<DirectedHyperlink> d;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) d.insert({i, NodeSet::Singleton(j)});
  return FdhGraph(n, d);
}

// Triangular prism: 3-regular on six nodes.
DiGraph Prism() {
  std::set<DiGraph::Link> links;
  const int edges[9][2] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                           {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  for (const auto& e : edges) {
    links.insert({e[0], e[1]});
    links.insert({e[1], e[0]});
  }
  return DiGraph(6, links);
}

TEST_CASE("two-level coordination on a ring collapses to pairwise links") {
  // With two neighbours and binary actions the agreement indicator expands
  // into pairwise terms in x_i plus a term free of x_i.
  const auto u = TwoLevelCoordination(RingGraph(5), SignZeta<Rational>(),
                                      Rational(1));
  CHECK(MinimalFdh(u) != TwoLevelShape(RingGraph(5)));
  CHECK(MinimalFdh(u) == AllPairs(5));
  for (int i = 0; i < 5; ++i) {
    std::set<NodeSet> pairs;
    for (int j = 0; j < 5; ++j)
      if (j != i) pairs.insert(Nodes({i, j}));
    pairs.insert(NodeSet::Range(5).without(i));
    const HGraph local = testing::BruteMinimalHGraph(u.space(), u.utility(i));
    CHECK(Preceq(local, HGraph(5, pairs)));
    CHECK_FALSE(OracleIsSeparable(u.space(), u.utility(i),
                                  HGraph(5, {NodeSet::Range(5).without(i)})));
  }
}

TEST_CASE("two-level coordination with three neighbours keeps the bonus link") {
  const DiGraph g = Prism();
  const auto u = TwoLevelCoordination(g, SignZeta<Rational>(), Rational(1));
  CHECK(MinimalFdh(u) == TwoLevelShape(g));
  for (int i = 0; i < 6; ++i)
    CHECK(testing::BruteMinimalHGraph(u.space(), u.utility(i))
              .hyperlinks()
              .contains(g.ClosedNeighborhood(i)));
}

TEST_CASE("two-level coordination degenerate cases") {
  // L = 0 is all-pairs coordination.
  const auto plain = TwoLevelCoordination(RingGraph(4), SignZeta<Rational>(),
                                          Rational(0));
  CHECK(plain == Coordination(CompleteGraph(4), SignZeta<Rational>()));
  // Without neighbours the indicator is the constant L.
  const auto iso = TwoLevelCoordination(EmptyGraph(3), SignZeta<Rational>(),
                                        Rational(2));
  CHECK(MinimalFdh(iso) == AllPairs(3));
  CHECK(StrategicallyEquivalent(
      iso, Coordination(CompleteGraph(3), SignZeta<Rational>())));
}

TEST_CASE("non-strategic games have no structure") {
  const StrategySpace sp({2, 3, 2});
  SplitMix64 rng(4);
  const auto n = testing::RandomNonstrategic<Rational>(sp, rng);
  CHECK(MinimalFdh(n).empty());
  CHECK(MinimalGraph(n).links().empty());
  const auto terms = ExtractFTerms(n, FdhFromGraph(CompleteGraph(3)));
  for (const auto& [d, t] : terms.terms) CHECK(t.isZero());
  for (const auto& t : terms.own) CHECK(t.isZero());
}

TEST_CASE("pairwise network games are separable on their graph") {
  const DiGraph g = LineGraph(4);
  const auto u = Coordination(g, SignZeta<Rational>());
  CHECK(IsFSeparable(u, FdhFromGraph(g)));
  CHECK(MinimalGraph(u) == g);
  // Generic pairwise terms on a directed graph recover the graph.
  const DiGraph dg(4, {{0, 1}, {1, 2}, {3, 0}, {2, 0}});
  std::set<DirectedHyperlink> d;
  for (const auto& [i, j] : dg.links()) d.insert({i, Nodes({j})});
  const auto planted =
      Planted<Rational>(StrategySpace::Binary(4), FdhGraph(4, d), 9, true);
  CHECK(MinimalGraph(planted) == dg);
}

TEST_CASE("f-terms of a graphical game resum to its normalization") {
  const DiGraph g = RingGraph(5);
  const auto u = BestShot(g, Q("1/4"));
  const FdhGraph f = FdhFromGraph(g);
  const auto terms = ExtractFTerms(u, f);
  const auto& sp = u.space();
  for (int i = 0; i < 5; ++i) {
    Vector<Rational> sum = Embed(sp, NodeSet::Singleton(i), terms.own[i]) +
                           terms.nonstrategic[i];
    for (const auto& [d, t] : terms.terms)
      if (d.tail == i) sum += Embed(sp, d.head.with(i), t);
    CHECK(sum == u.utility(i));
    CHECK(IsNonstrategic(Game<Rational>(
        StrategySpace::Binary(1),
        {Vector<Rational>::Constant(2, Rational(0))})));
  }
  CHECK_THROWS_AS(ExtractFTerms(u, FdhGraph(5)), InvalidArgument);
}

TEST_CASE("two-level coordination splits into pairwise and bonus terms") {
  const DiGraph g = Prism();
  const auto u = TwoLevelCoordination(g, SignZeta<Rational>(), Rational(1));
  const auto terms = ExtractFTerms(u, MinimalFdh(u));
  int pairwise = 0, bonus = 0;
  for (const auto& [d, t] : terms.terms) {
    (d.head.size() == 1 ? pairwise : bonus) += 1;
    CHECK_FALSE(t.isZero());
  }
  CHECK(pairwise == 12);
  CHECK(bonus == 6);
}

TEST_CASE("float mode tolerates rounding noise") {
  const auto exact = BestShotRing<Rational>(4, Q("1/3"));
  auto noisy = ToFloat(exact);
  std::vector<Vector<double>> u = noisy.utilities();
  SplitMix64 rng(6);
  for (auto& t : u)
    for (Eigen::Index k = 0; k < t.size(); ++k)
      t(k) += 1e-13 * (rng.UniformReal() - 0.5);
  noisy = Game<double>(noisy.space(), u);
  CHECK(MinimalFdh(noisy) == MinimalFdh(exact));
  SeparabilityOptions strict;
  strict.tolerance = 1e-16;
  CHECK(MinimalFdh(noisy, strict) != MinimalFdh(exact));
}

StrategySpace RandomSpace(SplitMix64& rng, int max_players = 4) {
  const int n = static_cast<int>(rng.UniformInt(1, max_players));
  std::vector<int> counts;
  ProfileIndex total = 1;
  for (int i = 0; i < n; ++i) {
    const int k = static_cast<int>(rng.UniformInt(1, total * 3 > 64 ? 2 : 3));
    counts.push_back(k);
    total *= k;
  }
  return StrategySpace(counts);
}

// Sum of random terms on the hyperlinks of h.
Vector<Rational> PlantedOn(const StrategySpace& sp, const HGraph& h,
                           SplitMix64& rng) {
  return PlantedFunction<Rational>(sp, h, rng);
}

TEST_CASE("property: inversion identity and brute-force components") {
  SplitMix64 rng(31);
  for (int t = 0; t < 80; ++t) {
    const StrategySpace sp = RandomSpace(rng);
    const auto f = testing::RandomTable<Rational>(sp.num_profiles(), rng);
    const ProfileIndex z = rng.UniformInt(0, sp.num_profiles() - 1);
    const auto d = MobiusDecompose(sp, f, SeparabilityOptions{z});
    CHECK(d.Reconstruct() == f);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << sp.num_players());
         ++mask) {
      NodeSet s;
      for (int v = 0; v < sp.num_players(); ++v)
        if (mask >> v & 1) s = s.with(v);
      CHECK(Embed(sp, s, d.component(s)) == testing::BruteMobius(sp, f, s, z));
    }
  }
}

TEST_CASE("property: minimal h-graph is reference independent") {
  SplitMix64 rng(32);
  for (int t = 0; t < 80; ++t) {
    const StrategySpace sp = RandomSpace(rng);
    const HGraph h = RandomHGraph(sp.num_players(), 2, 3, rng);
    const auto f = PlantedOn(sp, h, rng);
    const HGraph base = MinimalHGraph(sp, f);
    CHECK(Preceq(base, h));
    CHECK(base == testing::BruteMinimalHGraph(sp, f));
    for (int k = 0; k < 3; ++k) {
      const ProfileIndex z = rng.UniformInt(0, sp.num_profiles() - 1);
      CHECK(MinimalHGraph(sp, f, SeparabilityOptions{z}) == base);
    }
  }
}

TEST_CASE("property: separability test agrees with the span oracle") {
  SplitMix64 rng(33);
  for (int t = 0; t < 150; ++t) {
    const StrategySpace sp = RandomSpace(rng);
    const int n = sp.num_players();
    const auto f = PlantedOn(sp, RandomHGraph(n, 2, 3, rng), rng);
    const HGraph h = RandomHGraph(n, static_cast<int>(rng.UniformInt(0, 3)), 3,
                                  rng);
    CHECK(IsHSeparable(sp, f, h) == OracleIsSeparable(sp, f, h));
    CHECK(OracleIsSeparable(sp, f, MinimalHGraph(sp, f)));
    CHECK(OracleIsSeparable(sp, f, HGraph::Trivial(n)));
  }
}

TEST_CASE("property: intersection lemma") {
  SplitMix64 rng(34);
  for (int t = 0; t < 100; ++t) {
    const StrategySpace sp = RandomSpace(rng);
    const int n = sp.num_players();
    const HGraph h1 = RandomHGraph(n, 3, 3, rng);
    const HGraph h2 = RandomHGraph(n, 3, 3, rng);
    const auto f = PlantedOn(sp, Intersect(h1, h2), rng);
    REQUIRE(OracleIsSeparable(sp, f, h1));
    REQUIRE(OracleIsSeparable(sp, f, h2));
    CHECK(OracleIsSeparable(sp, f, Intersect(h1, h2)));
  }
}

TEST_CASE("property: minimality of the fdh-graph") {
  SplitMix64 rng(35);
  for (int t = 0; t < 60; ++t) {
    const StrategySpace sp = RandomSpace(rng);
    const int n = sp.num_players();
    const FdhGraph planted = RandomFdhGraph(n, 1, 2, rng);
    const auto u = Planted<Rational>(sp, planted, rng.Next());
    const FdhGraph m = MinimalFdh(u);
    CHECK(Preceq(m, planted));
    CHECK(OracleIsFSeparable(u, m));
    CHECK(IsFSeparable(u, planted));
    const FdhGraph g = RandomFdhGraph(n, 2, 2, rng);
    if (OracleIsFSeparable(u, g)) CHECK(Preceq(m, g));
    CHECK(IsFSeparable(u, g) == OracleIsFSeparable(u, g));
    CHECK(MinimalGraph(u) == GraphFromFdh(m));
    CHECK(IsFSeparable(u, FdhFromGraph(MinimalGraph(u))));
  }
}

TEST_CASE("property: structure is invariant under strategic equivalence") {
  SplitMix64 rng(36);
  for (int t = 0; t < 60; ++t) {
    const StrategySpace sp = RandomSpace(rng);
    const auto u = Planted<Rational>(
        sp, RandomFdhGraph(sp.num_players(), 1, 2, rng), rng.Next());
    const auto v = u + testing::RandomNonstrategic<Rational>(sp, rng);
    CHECK(MinimalFdh(u) == MinimalFdh(v));
    CHECK(MinimalGraph(u) == MinimalGraph(v));
  }
}

}  // namespace
}  // namespace gamesep
