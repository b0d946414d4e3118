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

// Generators for the classic network games used throughout the library and
// seeded planted-structure generators for property tests. All generators
// produce binary-action games unless a strategy space is passed in.

#ifndef GAMESEP_GAMEGEN_HPP_
#define GAMESEP_GAMEGEN_HPP_

#include <cstdint>

#include "gamesep/game.hpp"
#include "gamesep/hypergraph.hpp"
#include "gamesep/random.hpp"

namespace gamesep {

// ζ(a, b) = (−1)^{a−b}.
template <typename Scalar>
Matrix<Scalar> SignZeta();

// u_i(x) = Σ_{j ∈ N_i} ζ(x_i, x_j). ζ must be symmetric with
// ζ(0,0) >= ζ(0,1) <= ζ(1,1).
template <typename Scalar>
Game<Scalar> Coordination(const DiGraph& g, const Matrix<Scalar>& zeta);

// u_i = 1 − c if x_i = 1; 1 if x_i = 0 and some neighbour plays 1; else 0.
// Requires 0 <= c <= 1.
template <typename Scalar>
Game<Scalar> BestShot(const DiGraph& g, const Scalar& cost);

// u_i = max{x_{i−1}, x_i, x_{i+1}} − c·x_i on the ring of n >= 3 players.
template <typename Scalar>
Game<Scalar> BestShotRing(int n, const Scalar& cost);

// u_i = Σ_{j≠i} ζ(x_i, x_j) + L·[x_i = x_k for all k ∈ N_i], L >= 0.
template <typename Scalar>
Game<Scalar> TwoLevelCoordination(const DiGraph& g, const Matrix<Scalar>& zeta,
                                  const Scalar& bonus);

// u_i = 1 if x_i = x_j for all j ∈ N_i, else 0.
template <typename Scalar>
Game<Scalar> StrongCoordination(const DiGraph& g);

// 2×2 zero-sum game: player 0 gets +1 on a match and −1 otherwise.
template <typename Scalar>
Game<Scalar> MatchingPennies();

// Σ_J t_J(x_J) with integer entries of t_J uniform in [−9, 9].
template <typename Scalar>
Vector<Scalar> PlantedFunction(const StrategySpace& space, const HGraph& h,
                               SplitMix64& rng);

// u_i = Σ_{(i,J)} t_{i,J}(x_i, x_J), tables drawn as in PlantedFunction.
// With `require_generic`, draws are repeated (at most 16 times) until
// MinimalFdh(u) == Simplify(f).
template <typename Scalar>
Game<Scalar> Planted(const StrategySpace& space, const FdhGraph& f,
                     std::uint64_t seed, bool require_generic = false);

// GameFromPotential(PlantedFunction(h)). With `require_generic`, retried
// until MinimalHGraph(φ) == Simplify(h).
template <typename Scalar>
Game<Scalar> PlantedPotential(const StrategySpace& space, const HGraph& h,
                              std::uint64_t seed, bool require_generic = false);

// Random H-graph with `num_links` hyperlinks, each a uniformly drawn
// nonempty subset of at most `max_size` nodes.
HGraph RandomHGraph(int num_nodes, int num_links, int max_size,
                    SplitMix64& rng);

// Random FDH-graph: each node gets `links_per_node` hyperlinks (duplicates
// collapse) with uniformly drawn nonempty heads of at most `max_head` nodes.
FdhGraph RandomFdhGraph(int num_nodes, int links_per_node, int max_head,
                        SplitMix64& rng);

}  // namespace gamesep

#endif  // GAMESEP_GAMEGEN_HPP_
