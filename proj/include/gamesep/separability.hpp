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

// Minimal separability structure of functions on X and of games.
//
// A function f on X is expanded into interaction components relative to a
// reference profile z:
//
//   Φ_S(x_S) = Σ_{T ⊆ S} (−1)^{|S∖T|} f(x_T, z_{−T}),   f = Σ_S Φ_S.
//
// Each Φ_S vanishes as soon as one coordinate s ∈ S sits at z_s, which makes
// the expansion unique. f is a sum of terms on the hyperlinks of an H-graph
// exactly when every S with Φ_S ≢ 0 lies inside some hyperlink, so the
// minimal H-graph of f is the family of inclusion-maximal S ≠ ∅ with
// Φ_S ≢ 0. For games the same holds per player: components of u_i that
// contain i are the strategic part, the rest is non-strategic.
//
// Conventions:
//  * Φ_∅ (the constant) is never a hyperlink; constants are separable on
//    any H-graph, including the empty one.
//  * A component Φ_{{i}} of u_i (own-action only) never creates a directed
//    hyperlink; it is attached to one of player i's hyperlinks when there is
//    one and reported separately otherwise.

#ifndef GAMESEP_SEPARABILITY_HPP_
#define GAMESEP_SEPARABILITY_HPP_

#include <map>
#include <vector>

#include "gamesep/game.hpp"
#include "gamesep/hypergraph.hpp"
#include "gamesep/scalar.hpp"
#include "gamesep/strategy_space.hpp"

namespace gamesep {

struct SeparabilityOptions {
  // Reference profile z (index into X). All-zeros by default.
  ProfileIndex reference = 0;
  // Float mode only: a table is zero iff max |entry| <= tolerance·(1+max|f|).
  double tolerance = kDefaultTolerance;
};

// Interaction components of a function on X. Components that are
// identically zero are not stored; Φ_∅ is always present.
template <typename Scalar>
class InteractionDecomposition {
 public:
  InteractionDecomposition(StrategySpace space, ProfileIndex reference,
                           std::map<NodeSet, Vector<Scalar>> components)
      : space_(std::move(space)),
        reference_(reference),
        components_(std::move(components)) {}

  const StrategySpace& space() const { return space_; }
  ProfileIndex reference() const { return reference_; }
  // S -> table over space().Restrict(S).
  const std::map<NodeSet, Vector<Scalar>>& components() const {
    return components_;
  }
  // Φ_S, zero-filled when S carries no interaction.
  Vector<Scalar> component(NodeSet subset) const;
  bool IsNonzero(NodeSet subset) const {
    return components_.contains(subset) && !subset.empty();
  }
  // Nonempty S with Φ_S ≢ 0.
  std::vector<NodeSet> Support() const;
  // Σ_S Φ_S(x_S) for every x.
  Vector<Scalar> Reconstruct() const;

 private:
  StrategySpace space_;
  ProfileIndex reference_;
  std::map<NodeSet, Vector<Scalar>> components_;
};

// Throws InvalidArgument when f.size() != |X|.
template <typename Scalar>
InteractionDecomposition<Scalar> MobiusDecompose(
    const StrategySpace& space, const Vector<Scalar>& f,
    const SeparabilityOptions& options = {});

// True iff f varies along coordinate i somewhere.
template <typename Scalar>
bool DependsOn(const StrategySpace& space, const Vector<Scalar>& f, int i,
               double tolerance = kDefaultTolerance);

// Smallest simple H-graph on which f is separable.
template <typename Scalar>
HGraph MinimalHGraph(const StrategySpace& space, const Vector<Scalar>& f,
                     const SeparabilityOptions& options = {});

template <typename Scalar>
bool IsHSeparable(const StrategySpace& space, const Vector<Scalar>& f,
                  const HGraph& h, const SeparabilityOptions& options = {});

// Terms f_J over space.Restrict(J) with Σ_J f_J(x_J) = f(x). Each Φ_S goes
// to the lexicographically smallest J ⊇ S; Φ_∅ goes to the first hyperlink.
// Throws InvalidArgument if f is not separable on h.
template <typename Scalar>
std::map<NodeSet, Vector<Scalar>> ExtractHTerms(
    const StrategySpace& space, const Vector<Scalar>& f, const HGraph& h,
    const SeparabilityOptions& options = {});

// Independent check: is f in the span of the constants and of all functions
// of x_J, J ∈ h? Solved as a dense linear feasibility problem.
template <typename Scalar>
bool OracleIsSeparable(const StrategySpace& space, const Vector<Scalar>& f,
                       const HGraph& h, double tolerance = kDefaultTolerance);

// Smallest simple FDH-graph on which u is separable.
template <typename Scalar>
FdhGraph MinimalFdh(const Game<Scalar>& u,
                    const SeparabilityOptions& options = {});

template <typename Scalar>
bool IsFSeparable(const Game<Scalar>& u, const FdhGraph& f,
                  const SeparabilityOptions& options = {});

// Oracle counterpart of IsFSeparable: every u_i must pass OracleIsSeparable
// on LocalHGraph(f, i) ∪ {{i}}.
template <typename Scalar>
bool OracleIsFSeparable(const Game<Scalar>& u, const FdhGraph& f,
                        double tolerance = kDefaultTolerance);

// Per-hyperlink split of a game. For every player i:
//   u_i(x) = Σ_{(i,J)} terms[(i,J)](x_{{i}∪J}) + own[i](x_i) + nonstrategic[i](x)
// where the tables of `terms` live on space.Restrict({i} ∪ J), `own[i]` on
// A_i (nonzero only when player i has no hyperlink in f), and
// `nonstrategic[i]` is a full table independent of x_i.
template <typename Scalar>
struct FdhTerms {
  std::map<DirectedHyperlink, Vector<Scalar>> terms;
  std::vector<Vector<Scalar>> own;
  std::vector<Vector<Scalar>> nonstrategic;
};

// Throws InvalidArgument if u is not separable on f.
template <typename Scalar>
FdhTerms<Scalar> ExtractFTerms(const Game<Scalar>& u, const FdhGraph& f,
                               const SeparabilityOptions& options = {});

// GraphFromFdh(MinimalFdh(u)).
template <typename Scalar>
DiGraph MinimalGraph(const Game<Scalar>& u,
                     const SeparabilityOptions& options = {});

// Lifts a table over space.Restrict(subset) to a full table over X.
template <typename Scalar>
Vector<Scalar> Embed(const StrategySpace& space, NodeSet subset,
                     const Vector<Scalar>& table);

}  // namespace gamesep

#endif  // GAMESEP_SEPARABILITY_HPP_
