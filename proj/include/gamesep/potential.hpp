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

#ifndef GAMESEP_POTENTIAL_HPP_
#define GAMESEP_POTENTIAL_HPP_

#include <optional>
#include <vector>

#include "gamesep/game.hpp"
#include "gamesep/hypergraph.hpp"
#include "gamesep/separability.hpp"

namespace gamesep {

// Unilateral deviation x -> y by `player`.
struct DeviationEdge {
  ProfileIndex from = 0;
  ProfileIndex to = 0;
  int player = 0;
};

template <typename Scalar>
struct PotentialCertificate {
  bool is_potential = false;
  // φ with φ(all-zeros) = 0. Present iff is_potential.
  std::optional<PotentialFunction<Scalar>> potential;

  // Failure witnesses. `violated_edge` is the first deviation edge on which
  // the integrated φ disagrees with the deviator's utility change;
  // `edge_cycle` closes it through the integration tree (root -> from -> to
  // -> root). `four_cycle` is a closed 4-cycle x, x', x'', x''', x of
  // alternating deviations by two players. Both cycles start and end at the
  // same profile and have nonzero circulation.
  std::optional<DeviationEdge> violated_edge;
  std::vector<ProfileIndex> edge_cycle;
  std::vector<ProfileIndex> four_cycle;
  Scalar circulation{0};
};

// Σ_t [u_{i_t}(x_{t+1}) − u_{i_t}(x_t)] over a closed path of unilateral
// deviations, i_t being the coordinate in which x_t and x_{t+1} differ.
template <typename Scalar>
Scalar Circulation(const Game<Scalar>& u, const std::vector<ProfileIndex>& cycle);

// Integrates u along a breadth-first tree of the deviation graph from the
// all-zeros profile and checks the result on every deviation edge. Float
// mode compares with tolerance·(1 + max |u|).
template <typename Scalar>
PotentialCertificate<Scalar> DetectPotential(
    const Game<Scalar>& u, double tolerance = kDefaultTolerance);

// MinimalFdh(u) == FdhFromHGraph(MinimalHGraph(φ)). Throws InvalidArgument
// when u is not a potential game.
template <typename Scalar>
bool VerifyPotentialStructure(const Game<Scalar>& u,
                              const SeparabilityOptions& options = {});

// Every link of MinimalGraph(u) is a link of g.
template <typename Scalar>
bool IsGraphicalOn(const Game<Scalar>& u, const DiGraph& g,
                   const SeparabilityOptions& options = {});

// For a potential game u and an undirected g: MinimalGraph(u) is undirected
// and [IsGraphicalOn(u, g) <=> φ separable on MaximalCliques(g)]. Throws
// InvalidArgument for a non-potential u or a directed g.
template <typename Scalar>
bool VerifyCliqueCorollary(const Game<Scalar>& u, const DiGraph& g,
                           const SeparabilityOptions& options = {});

}  // namespace gamesep

#endif  // GAMESEP_POTENTIAL_HPP_
