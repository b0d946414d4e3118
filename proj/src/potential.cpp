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

#include "gamesep/potential.hpp"

#include <algorithm>
#include <deque>

#include "gamesep/errors.hpp"

namespace gamesep {
namespace {

int Deviator(const StrategySpace& space, ProfileIndex x, ProfileIndex y) {
  for (int i = 0; i < space.num_players(); ++i)
    if (space.ActionOf(x, i) != space.ActionOf(y, i)) return i;
  return -1;
}

// Profiles from the root to x along the integration tree.
std::vector<ProfileIndex> TreePath(const std::vector<ProfileIndex>& parent,
                                   ProfileIndex x) {
  std::vector<ProfileIndex> path{x};
  while (parent[x] != x) {
    x = parent[x];
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

template <typename Scalar>
std::vector<ProfileIndex> FindFourCycle(const Game<Scalar>& u,
                                        double tolerance) {
  const StrategySpace& space = u.space();
  const double bound =
      tolerance * (1.0 + [&] {
        double m = 0;
        for (const auto& t : u.utilities())
          m = std::max(m, ScalarTraits<Scalar>::ToDouble(MaxAbs(t)));
        return m;
      }());
  for (ProfileIndex x = 0; x < space.num_profiles(); ++x)
    for (int i = 0; i < space.num_players(); ++i)
      for (int j = i + 1; j < space.num_players(); ++j)
        for (int a = 0; a < space.actions(i); ++a)
          for (int b = 0; b < space.actions(j); ++b) {
            if (a == space.ActionOf(x, i) || b == space.ActionOf(x, j)) continue;
            const ProfileIndex x1 = space.WithAction(x, i, a);
            const ProfileIndex x2 = space.WithAction(x1, j, b);
            const ProfileIndex x3 = space.WithAction(x, j, b);
            std::vector<ProfileIndex> cycle{x, x1, x2, x3, x};
            if (!ScalarTraits<Scalar>::IsZero(Circulation(u, cycle), bound))
              return cycle;
          }
  return {};
}

}  // namespace

template <typename Scalar>
Scalar Circulation(const Game<Scalar>& u,
                   const std::vector<ProfileIndex>& cycle) {
  Scalar total(0);
  for (std::size_t t = 0; t + 1 < cycle.size(); ++t) {
    const int i = Deviator(u.space(), cycle[t], cycle[t + 1]);
    if (i < 0) continue;
    if (!IComparable(u.space(), cycle[t], cycle[t + 1], i))
      throw InvalidArgument("cycle step is not a unilateral deviation");
    total += u.utility(i)(cycle[t + 1]) - u.utility(i)(cycle[t]);
  }
  return total;
}

template <typename Scalar>
PotentialCertificate<Scalar> DetectPotential(const Game<Scalar>& u,
                                             double tolerance) {
  const StrategySpace& space = u.space();
  const ProfileIndex n = space.num_profiles();
  Vector<Scalar> phi = Vector<Scalar>::Zero(n);
  std::vector<ProfileIndex> parent(n, -1);
  parent[0] = 0;
  std::deque<ProfileIndex> queue{0};
  while (!queue.empty()) {
    const ProfileIndex x = queue.front();
    queue.pop_front();
    for (int i = 0; i < space.num_players(); ++i)
      for (int a = 0; a < space.actions(i); ++a) {
        const ProfileIndex y = space.WithAction(x, i, a);
        if (parent[y] >= 0) continue;
        parent[y] = x;
        phi(y) = phi(x) + u.utility(i)(y) - u.utility(i)(x);
        queue.push_back(y);
      }
  }

  double scale = 0;
  for (const auto& t : u.utilities())
    scale = std::max(scale, ScalarTraits<Scalar>::ToDouble(MaxAbs(t)));
  const double bound = tolerance * (1.0 + scale);

  PotentialCertificate<Scalar> cert;
  for (ProfileIndex x = 0; x < n && !cert.violated_edge; ++x)
    for (int i = 0; i < space.num_players() && !cert.violated_edge; ++i)
      for (int a = 0; a < space.actions(i); ++a) {
        const ProfileIndex y = space.WithAction(x, i, a);
        if (y == x) continue;
        const Scalar mismatch =
            (u.utility(i)(y) - u.utility(i)(x)) - (phi(y) - phi(x));
        if (!ScalarTraits<Scalar>::IsZero(mismatch, bound)) {
          cert.violated_edge = DeviationEdge{x, y, i};
          break;
        }
      }

  if (!cert.violated_edge) {
    cert.is_potential = true;
    cert.potential = PotentialFunction<Scalar>{space, std::move(phi)};
    return cert;
  }

  const DeviationEdge& e = *cert.violated_edge;
  cert.edge_cycle = TreePath(parent, e.from);
  std::vector<ProfileIndex> back = TreePath(parent, e.to);
  cert.edge_cycle.insert(cert.edge_cycle.end(), back.rbegin(), back.rend());
  cert.four_cycle = FindFourCycle(u, tolerance);
  cert.circulation = cert.four_cycle.empty() ? Circulation(u, cert.edge_cycle)
                                             : Circulation(u, cert.four_cycle);
  return cert;
}

template <typename Scalar>
bool VerifyPotentialStructure(const Game<Scalar>& u,
                              const SeparabilityOptions& options) {
  const auto cert = DetectPotential(u, options.tolerance);
  if (!cert.is_potential)
    throw InvalidArgument("structure check requires a potential game");
  const HGraph h_phi =
      MinimalHGraph(u.space(), cert.potential->values, options);
  return MinimalFdh(u, options) == FdhFromHGraph(h_phi);
}

template <typename Scalar>
bool IsGraphicalOn(const Game<Scalar>& u, const DiGraph& g,
                   const SeparabilityOptions& options) {
  if (g.node_count() != u.num_players())
    throw InvalidArgument("graph and game disagree on node count");
  const DiGraph minimal = MinimalGraph(u, options);
  return std::all_of(minimal.links().begin(), minimal.links().end(),
                     [&g](const DiGraph::Link& l) {
                       return g.HasLink(l.first, l.second);
                     });
}

template <typename Scalar>
bool VerifyCliqueCorollary(const Game<Scalar>& u, const DiGraph& g,
                           const SeparabilityOptions& options) {
  if (!g.IsUndirected())
    throw InvalidArgument("clique corollary requires an undirected graph");
  const auto cert = DetectPotential(u, options.tolerance);
  if (!cert.is_potential)
    throw InvalidArgument("clique corollary requires a potential game");
  if (!MinimalGraph(u, options).IsUndirected()) return false;
  const bool graphical = IsGraphicalOn(u, g, options);
  const bool clique_separable = IsHSeparable(
      u.space(), cert.potential->values, MaximalCliques(g), options);
  return graphical == clique_separable;
}

#define GAMESEP_INSTANTIATE(S)                                                \
  template S Circulation(const Game<S>&, const std::vector<ProfileIndex>&);   \
  template PotentialCertificate<S> DetectPotential(const Game<S>&, double);   \
  template bool VerifyPotentialStructure(const Game<S>&,                      \
                                         const SeparabilityOptions&);         \
  template bool IsGraphicalOn(const Game<S>&, const DiGraph&,                 \
                              const SeparabilityOptions&);                    \
  template bool VerifyCliqueCorollary(const Game<S>&, const DiGraph&,         \
                                      const SeparabilityOptions&);

GAMESEP_INSTANTIATE(double)
GAMESEP_INSTANTIATE(Rational)

#undef GAMESEP_INSTANTIATE

}  // namespace gamesep
