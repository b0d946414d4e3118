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

// Potential / harmonic / non-strategic decomposition u = u_pot + u_har + n
// with u_pot and u_har normalized.
//
// u_pot is pinned down as normalize(u^φ) for a φ solving
//
//   H · N · φ = H · ū,
//
// where N maps φ to normalize(u^φ), H is the harmonic residual operator
// r(x) = Σ_i Σ_{y ~_i x} [w_i(x) − w_i(y)] and ū = normalize(u). The
// harmonic component is then u_har = ū − u_pot.

#ifndef GAMESEP_DECOMPOSITION_HPP_
#define GAMESEP_DECOMPOSITION_HPP_

#include "gamesep/game.hpp"
#include "gamesep/hypergraph.hpp"
#include "gamesep/separability.hpp"

namespace gamesep {

template <typename Scalar>
struct GameDecomposition {
  Game<Scalar> potential;
  Game<Scalar> harmonic;
  Game<Scalar> nonstrategic;
  // φ* with φ*(all-zeros) = 0; u_pot = Normalize(GameFromPotential(φ*)).
  Vector<Scalar> potential_function;
};

// Outcome of every GameDecomposition invariant, checked independently.
struct DecompositionChecks {
  bool reconstructs = false;
  bool potential_is_potential = false;
  bool harmonic_is_harmonic = false;
  bool potential_normalized = false;
  bool harmonic_normalized = false;
  bool remainder_nonstrategic = false;

  bool all() const {
    return reconstructs && potential_is_potential && harmonic_is_harmonic &&
           potential_normalized && harmonic_normalized &&
           remainder_nonstrategic;
  }
  friend bool operator==(const DecompositionChecks&,
                         const DecompositionChecks&) = default;
};

template <typename Scalar>
DecompositionChecks CheckDecomposition(const Game<Scalar>& u,
                                       const GameDecomposition<Scalar>& d,
                                       double tolerance = kDefaultTolerance);

// Throws InvariantViolation if the linear system has no solution or a
// resulting invariant fails.
template <typename Scalar>
GameDecomposition<Scalar> Decompose(const Game<Scalar>& u,
                                    double tolerance = kDefaultTolerance);

// Per-hyperlink route: each term of ExtractFTerms(u, f) becomes a game on
// the players {i} ∪ J in which only i has nonzero utility; that small game is
// decomposed, extended by zeros to all players, and the pieces are summed.
// Throws InvalidArgument if u is not separable on f.
template <typename Scalar>
GameDecomposition<Scalar> DecomposeLocal(const Game<Scalar>& u,
                                         const FdhGraph& f,
                                         const SeparabilityOptions& options = {});

// With F = MinimalFdh(u): u_pot and u_har are both separable on
// UnderlyingUndirected(F).
template <typename Scalar>
bool VerifyComponentSeparability(const Game<Scalar>& u,
                                 const SeparabilityOptions& options = {});

template <typename Scalar>
bool VerifyComponentSeparability(const Game<Scalar>& u,
                                 const GameDecomposition<Scalar>& d,
                                 const SeparabilityOptions& options = {});

}  // namespace gamesep

#endif  // GAMESEP_DECOMPOSITION_HPP_
