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

#include "gamesep/decomposition.hpp"

#include <string>

#include "gamesep/errors.hpp"
#include "gamesep/linear_solve.hpp"
#include "gamesep/potential.hpp"

namespace gamesep {
namespace {

// Column y of H·N: the harmonic residual of normalize(u^{e_y}).
template <typename Scalar>
Matrix<Scalar> HarmonicOfNormalizedPotential(const StrategySpace& space) {
  const ProfileIndex n = space.num_profiles();
  Matrix<Scalar> m(n, n);
  for (ProfileIndex y = 0; y < n; ++y) {
    Vector<Scalar> e = Vector<Scalar>::Zero(n);
    e(y) = Scalar(1);
    const Game<Scalar> w =
        Normalize(GameFromPotential(PotentialFunction<Scalar>{space, e}));
    m.col(y) = HarmonicResidual(w);
  }
  return m;
}

double MaxUtility(const std::vector<Vector<double>>& tables) {
  double m = 0;
  for (const auto& t : tables) m = std::max(m, MaxAbs(t));
  return m;
}

// Scale-aware tolerance for float-mode comparisons between games.
template <typename Scalar>
double GameTolerance(const Game<Scalar>& u, double tolerance) {
  if constexpr (ScalarTraits<Scalar>::kExact) {
    return tolerance;
  } else {
    return tolerance * (1.0 + MaxUtility(u.utilities()));
  }
}

}  // namespace

template <typename Scalar>
DecompositionChecks CheckDecomposition(const Game<Scalar>& u,
                                       const GameDecomposition<Scalar>& d,
                                       double tolerance) {
  const double tol = GameTolerance(u, tolerance);
  DecompositionChecks c;
  const Game<Scalar> rest = u - d.potential - d.harmonic - d.nonstrategic;
  c.reconstructs = true;
  for (const auto& t : rest.utilities())
    if (!IsZeroTable(t, tol, 0.0)) c.reconstructs = false;
  c.potential_is_potential = DetectPotential(d.potential, tol).is_potential;
  c.harmonic_is_harmonic = IsHarmonic(d.harmonic, tol);
  c.potential_normalized = IsNormalized(d.potential, tol);
  c.harmonic_normalized = IsNormalized(d.harmonic, tol);
  c.remainder_nonstrategic = IsNonstrategic(d.nonstrategic, tol);
  return c;
}

template <typename Scalar>
GameDecomposition<Scalar> Decompose(const Game<Scalar>& u, double tolerance) {
  const StrategySpace& space = u.space();
  const ProfileIndex n = space.num_profiles();
  const Game<Scalar> normalized = Normalize(u);

  // φ(all-zeros) = 0 removes the constant null direction.
  const Matrix<Scalar> system = HarmonicOfNormalizedPotential<Scalar>(space);
  const Vector<Scalar> rhs = HarmonicResidual(normalized);
  const auto solution = SolveConsistent<Scalar>(
      system.rightCols(n - 1), rhs, GameTolerance(u, tolerance));
  if (!solution)
    throw InvariantViolation("potential component system is inconsistent");

  Vector<Scalar> phi = Vector<Scalar>::Zero(n);
  phi.tail(n - 1) = *solution;
  Game<Scalar> potential =
      Normalize(GameFromPotential(PotentialFunction<Scalar>{space, phi}));
  Game<Scalar> harmonic = normalized - potential;
  GameDecomposition<Scalar> d{std::move(potential), std::move(harmonic),
                              u - normalized, std::move(phi)};

  const DecompositionChecks checks = CheckDecomposition(u, d, tolerance);
  if (!checks.all())
    throw InvariantViolation("decomposition failed its own invariants");
  return d;
}

template <typename Scalar>
GameDecomposition<Scalar> DecomposeLocal(const Game<Scalar>& u,
                                         const FdhGraph& f,
                                         const SeparabilityOptions& options) {
  const StrategySpace& space = u.space();
  const FdhTerms<Scalar> terms = ExtractFTerms(u, f, options);

  std::vector<Vector<Scalar>> pot(u.num_players(),
                                  Vector<Scalar>::Zero(space.num_profiles()));
  std::vector<Vector<Scalar>> har = pot;
  Vector<Scalar> phi = Vector<Scalar>::Zero(space.num_profiles());

  // Decomposes the game on `players` in which only `owner` has utility
  // `table`, and adds the zero-extended components.
  auto add_auxiliary = [&](NodeSet players, int owner,
                           const Vector<Scalar>& table) {
    const StrategySpace sub = space.Restrict(players);
    const std::vector<int> members = players.members();
    std::vector<Vector<Scalar>> utilities;
    for (int h : members)
      utilities.push_back(h == owner ? table
                                     : Vector<Scalar>::Zero(sub.num_profiles()));
    const auto local = Decompose(Game<Scalar>(sub, std::move(utilities)),
                                 options.tolerance);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int pos = static_cast<int>(k);
      pot[members[k]] += Embed(space, players, local.potential.utility(pos));
      har[members[k]] += Embed(space, players, local.harmonic.utility(pos));
    }
    phi += Embed(space, players, local.potential_function);
  };

  for (const auto& [link, table] : terms.terms)
    add_auxiliary(link.head.with(link.tail), link.tail, table);
  for (int i = 0; i < u.num_players(); ++i)
    if (!IsZeroTable(terms.own[i], options.tolerance, 0.0))
      add_auxiliary(NodeSet::Singleton(i), i, terms.own[i]);

  phi.array() -= phi(0);
  Game<Scalar> potential(space, std::move(pot));
  Game<Scalar> harmonic(space, std::move(har));
  Game<Scalar> nonstrategic = u - potential - harmonic;
  return GameDecomposition<Scalar>{std::move(potential), std::move(harmonic),
                                   std::move(nonstrategic), std::move(phi)};
}

template <typename Scalar>
bool VerifyComponentSeparability(const Game<Scalar>& u,
                                 const GameDecomposition<Scalar>& d,
                                 const SeparabilityOptions& options) {
  const FdhGraph undirected = UnderlyingUndirected(MinimalFdh(u, options));
  return IsFSeparable(d.potential, undirected, options) &&
         IsFSeparable(d.harmonic, undirected, options);
}

template <typename Scalar>
bool VerifyComponentSeparability(const Game<Scalar>& u,
                                 const SeparabilityOptions& options) {
  return VerifyComponentSeparability(u, Decompose(u, options.tolerance),
                                     options);
}

#define GAMESEP_INSTANTIATE(S)                                                 \
  template DecompositionChecks CheckDecomposition(                             \
      const Game<S>&, const GameDecomposition<S>&, double);                    \
  template GameDecomposition<S> Decompose(const Game<S>&, double);             \
  template GameDecomposition<S> DecomposeLocal(const Game<S>&,                 \
                                               const FdhGraph&,                \
                                               const SeparabilityOptions&);    \
  template bool VerifyComponentSeparability(const Game<S>&,                    \
                                            const SeparabilityOptions&);       \
  template bool VerifyComponentSeparability(                                   \
      const Game<S>&, const GameDecomposition<S>&, const SeparabilityOptions&);

GAMESEP_INSTANTIATE(double)
GAMESEP_INSTANTIATE(Rational)

#undef GAMESEP_INSTANTIATE

}  // namespace gamesep
