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

#include "gamesep/gamegen.hpp"

#include <algorithm>

#include "gamesep/errors.hpp"
#include "gamesep/separability.hpp"

namespace gamesep {
namespace {

constexpr int kGenericRetries = 16;
constexpr int kCoefficientBound = 9;

template <typename Scalar>
void CheckCoordinationZeta(const Matrix<Scalar>& zeta) {
  if (zeta.rows() != 2 || zeta.cols() != 2)
    throw InvalidArgument("pairwise table must be 2x2");
  if (zeta(0, 1) != zeta(1, 0))
    throw InvalidArgument("pairwise table must be symmetric");
  if (zeta(0, 0) < zeta(0, 1) || zeta(1, 1) < zeta(0, 1))
    throw InvalidArgument("pairwise table must reward coordination");
}

// Binary game with u_i(x) = fn(i, profile).
template <typename Scalar, typename Fn>
Game<Scalar> Tabulate(int n, Fn&& fn) {
  const StrategySpace space = StrategySpace::Binary(n);
  std::vector<Vector<Scalar>> utilities;
  for (int i = 0; i < n; ++i) {
    Vector<Scalar> t(space.num_profiles());
    for (ProfileIndex x = 0; x < space.num_profiles(); ++x)
      t(x) = fn(i, space.Decode(x));
    utilities.push_back(std::move(t));
  }
  return Game<Scalar>(space, std::move(utilities));
}

template <typename Scalar>
Vector<Scalar> RandomTable(ProfileIndex size, SplitMix64& rng) {
  Vector<Scalar> t(size);
  for (ProfileIndex y = 0; y < size; ++y)
    t(y) = Scalar(rng.UniformInt(-kCoefficientBound, kCoefficientBound));
  return t;
}

template <typename Scalar>
Game<Scalar> DrawPlanted(const StrategySpace& space, const FdhGraph& f,
                         SplitMix64& rng) {
  std::vector<Vector<Scalar>> utilities(
      space.num_players(), Vector<Scalar>::Zero(space.num_profiles()));
  for (const auto& d : f.hyperlinks()) {
    const NodeSet players = d.head.with(d.tail);
    const auto table =
        RandomTable<Scalar>(space.Restrict(players).num_profiles(), rng);
    utilities[d.tail] += Embed(space, players, table);
  }
  return Game<Scalar>(space, std::move(utilities));
}

NodeSet RandomSubset(int num_nodes, int max_size, SplitMix64& rng) {
  const int size = static_cast<int>(rng.UniformInt(1, max_size));
  std::vector<int> nodes(num_nodes);
  for (int v = 0; v < num_nodes; ++v) nodes[v] = v;
  // Partial Fisher–Yates.
  NodeSet out;
  for (int k = 0; k < size; ++k) {
    const int pick = static_cast<int>(rng.UniformInt(k, num_nodes - 1));
    std::swap(nodes[k], nodes[pick]);
    out = out.with(nodes[k]);
  }
  return out;
}

}  // namespace

template <typename Scalar>
Matrix<Scalar> SignZeta() {
  Matrix<Scalar> z(2, 2);
  z << Scalar(1), Scalar(-1), Scalar(-1), Scalar(1);
  return z;
}

template <typename Scalar>
Game<Scalar> Coordination(const DiGraph& g, const Matrix<Scalar>& zeta) {
  CheckCoordinationZeta(zeta);
  return Tabulate<Scalar>(g.node_count(), [&](int i, const Profile& x) {
    Scalar total(0);
    g.OutNeighbors(i).ForEach([&](int j) { total += zeta(x[i], x[j]); });
    return total;
  });
}

template <typename Scalar>
Game<Scalar> BestShot(const DiGraph& g, const Scalar& cost) {
  if (cost < 0 || cost > 1) throw InvalidArgument("cost must lie in [0, 1]");
  return Tabulate<Scalar>(g.node_count(), [&](int i, const Profile& x) {
    if (x[i] == 1) return Scalar(1) - cost;
    bool covered = false;
    g.OutNeighbors(i).ForEach([&](int j) { covered = covered || x[j] == 1; });
    return covered ? Scalar(1) : Scalar(0);
  });
}

template <typename Scalar>
Game<Scalar> BestShotRing(int n, const Scalar& cost) {
  if (n < 3) throw InvalidArgument("ring needs at least 3 players");
  if (cost < 0 || cost > 1) throw InvalidArgument("cost must lie in [0, 1]");
  return Tabulate<Scalar>(n, [&](int i, const Profile& x) {
    const int best = std::max({x[(i + n - 1) % n], x[i], x[(i + 1) % n]});
    return Scalar(best) - cost * Scalar(x[i]);
  });
}

template <typename Scalar>
Game<Scalar> TwoLevelCoordination(const DiGraph& g, const Matrix<Scalar>& zeta,
                                  const Scalar& bonus) {
  CheckCoordinationZeta(zeta);
  if (bonus < 0) throw InvalidArgument("bonus must be non-negative");
  const int n = g.node_count();
  return Tabulate<Scalar>(n, [&](int i, const Profile& x) {
    Scalar total(0);
    for (int j = 0; j < n; ++j)
      if (j != i) total += zeta(x[i], x[j]);
    bool agree = true;
    g.OutNeighbors(i).ForEach([&](int k) { agree = agree && x[k] == x[i]; });
    return agree ? total + bonus : total;
  });
}

template <typename Scalar>
Game<Scalar> StrongCoordination(const DiGraph& g) {
  return Tabulate<Scalar>(g.node_count(), [&](int i, const Profile& x) {
    bool agree = true;
    g.OutNeighbors(i).ForEach([&](int j) { agree = agree && x[j] == x[i]; });
    return agree ? Scalar(1) : Scalar(0);
  });
}

template <typename Scalar>
Game<Scalar> MatchingPennies() {
  return Tabulate<Scalar>(2, [](int i, const Profile& x) {
    const Scalar match = x[0] == x[1] ? Scalar(1) : Scalar(-1);
    return i == 0 ? match : Scalar(-match);
  });
}

template <typename Scalar>
Vector<Scalar> PlantedFunction(const StrategySpace& space, const HGraph& h,
                               SplitMix64& rng) {
  if (h.node_count() != space.num_players())
    throw InvalidArgument("H-graph and strategy space disagree on node count");
  Vector<Scalar> f = Vector<Scalar>::Zero(space.num_profiles());
  for (NodeSet j : h.hyperlinks())
    f += Embed(space, j,
               RandomTable<Scalar>(space.Restrict(j).num_profiles(), rng));
  return f;
}

template <typename Scalar>
Game<Scalar> Planted(const StrategySpace& space, const FdhGraph& f,
                     std::uint64_t seed, bool require_generic) {
  if (f.node_count() != space.num_players())
    throw InvalidArgument("FDH-graph and strategy space disagree on node count");
  SplitMix64 rng(seed);
  Game<Scalar> u = DrawPlanted<Scalar>(space, f, rng);
  if (!require_generic) return u;
  const FdhGraph target = Simplify(f);
  for (int attempt = 1; attempt < kGenericRetries && MinimalFdh(u) != target;
       ++attempt)
    u = DrawPlanted<Scalar>(space, f, rng);
  return u;
}

template <typename Scalar>
Game<Scalar> PlantedPotential(const StrategySpace& space, const HGraph& h,
                              std::uint64_t seed, bool require_generic) {
  SplitMix64 rng(seed);
  Vector<Scalar> phi = PlantedFunction<Scalar>(space, h, rng);
  if (require_generic) {
    const HGraph target = Simplify(h);
    for (int attempt = 1;
         attempt < kGenericRetries && MinimalHGraph(space, phi) != target;
         ++attempt)
      phi = PlantedFunction<Scalar>(space, h, rng);
  }
  return GameFromPotential(PotentialFunction<Scalar>{space, std::move(phi)});
}

HGraph RandomHGraph(int num_nodes, int num_links, int max_size,
                    SplitMix64& rng) {
  std::set<NodeSet> links;
  for (int k = 0; k < num_links; ++k)
    links.insert(RandomSubset(num_nodes, std::min(max_size, num_nodes), rng));
  return HGraph(num_nodes, std::move(links));
}

FdhGraph RandomFdhGraph(int num_nodes, int links_per_node, int max_head,
                        SplitMix64& rng) {
  std::set<DirectedHyperlink> links;
  if (num_nodes < 2) return FdhGraph(num_nodes);
  for (int i = 0; i < num_nodes; ++i)
    for (int k = 0; k < links_per_node; ++k) {
      // Draw among the other nodes, then shift past i.
      const NodeSet others =
          RandomSubset(num_nodes - 1, std::min(max_head, num_nodes - 1), rng);
      NodeSet head;
      others.ForEach([&](int v) { head = head.with(v < i ? v : v + 1); });
      links.insert({i, head});
    }
  return FdhGraph(num_nodes, std::move(links));
}

#define GAMESEP_INSTANTIATE(S)                                                \
  template Matrix<S> SignZeta();                                              \
  template Game<S> Coordination(const DiGraph&, const Matrix<S>&);            \
  template Game<S> BestShot(const DiGraph&, const S&);                        \
  template Game<S> BestShotRing(int, const S&);                               \
  template Game<S> TwoLevelCoordination(const DiGraph&, const Matrix<S>&,     \
                                        const S&);                            \
  template Game<S> StrongCoordination(const DiGraph&);                        \
  template Game<S> MatchingPennies();                                         \
  template Vector<S> PlantedFunction(const StrategySpace&, const HGraph&,     \
                                     SplitMix64&);                            \
  template Game<S> Planted(const StrategySpace&, const FdhGraph&,             \
                           std::uint64_t, bool);                              \
  template Game<S> PlantedPotential(const StrategySpace&, const HGraph&,      \
                                    std::uint64_t, bool);

GAMESEP_INSTANTIATE(double)
GAMESEP_INSTANTIATE(Rational)

#undef GAMESEP_INSTANTIATE

}  // namespace gamesep
