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

#include "gamesep/decomposition.hpp"
#include "gamesep/errors.hpp"
#include "gamesep/gamegen.hpp"
#include "gamesep/potential.hpp"
#include "gamesep/separability.hpp"
#include "test_util.hpp"

namespace gamesep {
namespace {

using testing::F;
using testing::Q;

Rational Sign(int a, int b) { return Rational(a == b ? 1 : -1); }

TEST_CASE("best-shot ring components in closed form") {
  const Rational c = Q("1/2");
  const auto u = BestShotRing<Rational>(6, c);
  const auto d = Decompose(u);
  const auto& sp = u.space();
  int pot_mismatch = 0, printed_mismatch = 0, har_mismatch = 0;
  Vector<Rational> printed_sum = Vector<Rational>::Zero(sp.num_profiles());
  for (ProfileIndex k = 0; k < sp.num_profiles(); ++k) {
    const Profile x = sp.Decode(k);
    for (int i = 0; i < 6; ++i) {
      auto at = [&](int s) { return x[((i + s) % 6 + 6) % 6]; };
      const Rational w(1 - 2 * x[i], 12);
      const Rational pot =
          (Rational(std::abs(at(1) - at(2)) + std::abs(at(-1) - at(-2)) +
                    4 * (at(1) + at(-1)) - 2 * at(1) * at(-1)) -
           6 * (1 - c)) *
          w;
      const Rational printed =
          Rational(std::abs(at(1) - at(2)) + std::abs(at(-1) - at(-2)) -
                   2 * (at(1) + at(-1))) *
          w;
      const Rational har =
          Rational(2 * (at(1) + at(-1)) - 4 * at(1) * at(-1) -
                   std::abs(at(1) - at(2)) - std::abs(at(-1) - at(-2))) *
          w;
      pot_mismatch += d.potential.utility(i)(k) != pot;
      printed_mismatch += d.harmonic.utility(i)(k) != printed;
      har_mismatch += d.harmonic.utility(i)(k) != har;
      printed_sum(k) += 2 * printed;
    }
  }
  CHECK(pot_mismatch == 0);
  CHECK(har_mismatch == 0);
  // The sign-flipped form without the product term is not harmonic, so it
  // cannot be the harmonic component.
  CHECK(printed_mismatch > 0);
  CHECK_FALSE(printed_sum.isZero());
  // The harmonic part does not depend on the cost.
  CHECK(Decompose(BestShotRing<Rational>(6, Q("1/5"))).harmonic == d.harmonic);
}

TEST_CASE("best-shot ring components live on the two-hop fdh-graph") {
  const auto u = BestShotRing<Rational>(6, Q("1/2"));
  const auto d = Decompose(u);
  std::set<DirectedHyperlink> links;
  for (int i = 0; i < 6; ++i) {
    auto node = [&](int s) { return ((i + s) % 6 + 6) % 6; };
    links.insert({i, testing::Nodes({node(-2), node(-1)})});
    links.insert({i, testing::Nodes({node(-1), node(1)})});
    links.insert({i, testing::Nodes({node(1), node(2)})});
  }
  const FdhGraph two_hop(6, links);
  CHECK(MinimalFdh(d.potential) == two_hop);
  CHECK(MinimalFdh(d.harmonic) == two_hop);
  CHECK(VerifyComponentSeparability(u));
  CHECK(VerifyComponentSeparability(u, d));
  std::set<NodeSet> triples;
  for (int i = 0; i < 6; ++i)
    triples.insert(testing::Nodes({(i + 5) % 6, i, (i + 1) % 6}));
  CHECK(MinimalHGraph(u.space(), d.potential_function) == HGraph(6, triples));
}

TEST_CASE("strong coordination on a ring is a scaled coordination game") {
  const auto u = StrongCoordination<Rational>(RingGraph(6));
  CHECK(DetectPotential(u).is_potential);
  const auto d = Decompose(u);
  CHECK(d.harmonic == Game<Rational>::Zero(u.space()));
  const auto quarter =
      Coordination(RingGraph(6), Matrix<Rational>(SignZeta<Rational>() / 4));
  CHECK(d.potential == Normalize(quarter));
}

TEST_CASE("strong coordination on a line") {
  const int n = 5;
  const auto u = StrongCoordination<Rational>(LineGraph(n));
  CHECK_FALSE(DetectPotential(u).is_potential);
  const auto d = Decompose(u);
  const auto weighted = testing::TabulateGame<Rational>(
      u.space(), [&](int i, const Profile& x) {
        Rational s(0);
        for (int j : {i - 1, i + 1}) {
          if (j < 0 || j >= n) continue;
          const bool extremal = std::min(i, j) == 0 || std::max(i, j) == n - 1;
          s += (extremal ? Q("3/8") : Q("1/4")) * Sign(x[i], x[j]);
        }
        return s;
      });
  CHECK(d.potential == Normalize(weighted));
  CHECK(MinimalFdh(d.harmonic) == F(n, {{0, {1}}, {1, {0}}, {3, {4}}, {4, {3}}}));
  const auto& sp = u.space();
  for (ProfileIndex k = 0; k < sp.num_profiles(); ++k) {
    const Profile x = sp.Decode(k);
    CHECK(d.harmonic.utility(0)(k) == Q("1/8") * Sign(x[0], x[1]));
    CHECK(d.harmonic.utility(1)(k) == Q("-1/8") * Sign(x[0], x[1]));
    CHECK(d.harmonic.utility(2)(k) == 0);
    CHECK(d.harmonic.utility(3)(k) == Q("-1/8") * Sign(x[3], x[4]));
    CHECK(d.harmonic.utility(4)(k) == Q("1/8") * Sign(x[3], x[4]));
  }
  CHECK(VerifyComponentSeparability(u, d));
}

TEST_CASE("uniqueness examples") {
  SplitMix64 rng(51);
  const StrategySpace sp({2, 3, 2});
  const auto pot = GameFromPotential(PotentialFunction<Rational>{
      sp, testing::RandomTable<Rational>(sp.num_profiles(), rng)});
  const auto d = Decompose(pot);
  CHECK(d.harmonic == Game<Rational>::Zero(sp));
  CHECK(d.potential == Normalize(pot));

  const auto mp = Normalize(MatchingPennies<Rational>());
  const auto dm = Decompose(mp);
  CHECK(dm.potential == Game<Rational>::Zero(mp.space()));
  CHECK(dm.harmonic == mp);
  CHECK(dm.nonstrategic == Game<Rational>::Zero(mp.space()));

  const auto n = testing::RandomNonstrategic<Rational>(sp, rng);
  const auto dn = Decompose(n);
  CHECK(dn.potential == Game<Rational>::Zero(sp));
  CHECK(dn.harmonic == Game<Rational>::Zero(sp));
  CHECK(dn.nonstrategic == n);
}

TEST_CASE("local decomposition") {
  const auto u = BestShotRing<Rational>(6, Q("1/2"));
  const auto global = Decompose(u);
  const auto local = DecomposeLocal(u, MinimalFdh(u));
  CHECK(Normalize(local.potential) == global.potential);
  CHECK(Normalize(local.harmonic) == global.harmonic);
  CHECK(CheckDecomposition(u, local).all());

  // One hyperlink: the local route is a single restricted decomposition.
  const auto single = Planted<Rational>(StrategySpace::Binary(3),
                                        F(3, {{0, {1, 2}}}), 7);
  const auto ds = DecomposeLocal(single, F(3, {{0, {1, 2}}}));
  CHECK(ds.potential == Decompose(single).potential);

  SplitMix64 rng(52);
  const auto n =
      testing::RandomNonstrategic<Rational>(StrategySpace({2, 2, 3}), rng);
  const auto dn = DecomposeLocal(n, FdhGraph(3));
  CHECK(dn.potential == Game<Rational>::Zero(n.space()));
  CHECK(dn.harmonic == Game<Rational>::Zero(n.space()));
  CHECK_THROWS_AS(DecomposeLocal(u, FdhGraph(6)), InvalidArgument);
}

TEST_CASE("checks flag a broken decomposition") {
  const auto u = BestShotRing<Rational>(4, Q("1/2"));
  auto d = Decompose(u);
  CHECK(CheckDecomposition(u, d).all());
  d.harmonic = d.harmonic + d.potential;
  const auto checks = CheckDecomposition(u, d);
  CHECK_FALSE(checks.all());
  CHECK_FALSE(checks.reconstructs);
  CHECK_FALSE(checks.harmonic_is_harmonic);
}

TEST_CASE("idempotence") {
  const auto u = BestShotRing<Rational>(5, Q("1/3"));
  const auto d = Decompose(u);
  const auto dp = Decompose(d.potential);
  CHECK(dp.potential == d.potential);
  CHECK(dp.harmonic == Game<Rational>::Zero(u.space()));
  const auto dh = Decompose(d.harmonic);
  CHECK(dh.potential == Game<Rational>::Zero(u.space()));
  CHECK(dh.harmonic == d.harmonic);
}

StrategySpace SmallSpace(SplitMix64& rng) {
  return StrategySpace({static_cast<int>(rng.UniformInt(1, 3)),
                        static_cast<int>(rng.UniformInt(1, 3)),
                        static_cast<int>(rng.UniformInt(1, 3))});
}

TEST_CASE("property: decomposition invariants against brute-force checks") {
  SplitMix64 rng(53);
  for (int t = 0; t < 80; ++t) {
    const StrategySpace sp = SmallSpace(rng);
    const auto u = testing::RandomGame<Rational>(sp, rng);
    const auto d = Decompose(u);
    CHECK(d.potential + d.harmonic + d.nonstrategic == u);
    CHECK(testing::BruteIsPotential(d.potential));
    CHECK(testing::BruteIsHarmonic(d.harmonic));
    CHECK(testing::BruteIsNormalized(d.potential));
    CHECK(testing::BruteIsNormalized(d.harmonic));
    CHECK(IsNonstrategic(d.nonstrategic));
    CHECK(d.potential_function(0) == 0);
    CHECK(VerifyComponentSeparability(u, d));
    const auto n = testing::RandomNonstrategic<Rational>(sp, rng);
    const auto dn = Decompose(u + n);
    CHECK(dn.potential == d.potential);
    CHECK(dn.harmonic == d.harmonic);
  }
}

TEST_CASE("property: float decomposition matches the Laplacian projection") {
  SplitMix64 rng(54);
  for (int t = 0; t < 40; ++t) {
    const StrategySpace sp = SmallSpace(rng);
    const auto q = testing::RandomGame<Rational>(sp, rng);
    const auto u = ToFloat(q);
    const auto d = Decompose(u);
    CHECK(testing::MaxAbsDiff(d.potential, testing::LaplacianPotentialPart(u)) <
          1e-8);
    const auto exact = Decompose(q);
    CHECK(testing::MaxAbsDiff(d.harmonic, ToFloat(exact.harmonic)) < 1e-8);
  }
}

TEST_CASE("property: local and global decompositions agree on planted games") {
  SplitMix64 rng(55);
  for (int t = 0; t < 60; ++t) {
    const StrategySpace sp = SmallSpace(rng);
    const FdhGraph f = RandomFdhGraph(3, 1, 2, rng);
    const auto u = Planted<Rational>(sp, f, rng.Next());
    const auto d = Decompose(u);
    const auto dl = DecomposeLocal(u, f);
    CHECK(Normalize(dl.potential) == d.potential);
    CHECK(Normalize(dl.harmonic) == d.harmonic);
    CHECK(VerifyComponentSeparability(u, d));
    CHECK(IsFSeparable(d.potential, UnderlyingUndirected(MinimalFdh(u))));
    CHECK(IsFSeparable(d.harmonic, UnderlyingUndirected(MinimalFdh(u))));
  }
}

}  // namespace
}  // namespace gamesep
