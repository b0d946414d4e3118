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

#include "gamesep/game.hpp"

namespace gamesep {

template <typename Scalar>
Vector<Scalar> FiberSums(const StrategySpace& space, const Vector<Scalar>& t,
                         int i) {
  const ProfileIndex n = space.num_profiles();
  const ProfileIndex stride = space.stride(i);
  const int k = space.actions(i);
  Vector<Scalar> out(n);
  for (ProfileIndex x = 0; x < n; ++x) {
    if (space.ActionOf(x, i) != 0) continue;
    Scalar sum(0);
    for (int a = 0; a < k; ++a) sum += t(x + a * stride);
    for (int a = 0; a < k; ++a) out(x + a * stride) = sum;
  }
  return out;
}

template <typename Scalar>
Game<Scalar> Normalize(const Game<Scalar>& u) {
  const StrategySpace& space = u.space();
  std::vector<Vector<Scalar>> out;
  out.reserve(u.num_players());
  for (int i = 0; i < u.num_players(); ++i) {
    const Scalar size(space.actions(i));
    Vector<Scalar> mean = FiberSums(space, u.utility(i), i);
    for (Eigen::Index x = 0; x < mean.size(); ++x) mean(x) /= size;
    out.push_back(u.utility(i) - mean);
  }
  return Game<Scalar>(space, std::move(out));
}

template <typename Scalar>
bool IsNormalized(const Game<Scalar>& u, double tolerance) {
  for (int i = 0; i < u.num_players(); ++i)
    if (!IsZeroTable(FiberSums(u.space(), u.utility(i), i), tolerance, 0.0))
      return false;
  return true;
}

template <typename Scalar>
bool IsNonstrategic(const Game<Scalar>& u, double tolerance) {
  const StrategySpace& space = u.space();
  for (int i = 0; i < u.num_players(); ++i) {
    const auto& t = u.utility(i);
    for (ProfileIndex x = 0; x < space.num_profiles(); ++x) {
      const int a = space.ActionOf(x, i);
      if (a == 0) continue;
      const Scalar diff = t(x) - t(x - a * space.stride(i));
      if (!ScalarTraits<Scalar>::IsZero(diff, tolerance)) return false;
    }
  }
  return true;
}

template <typename Scalar>
Vector<Scalar> HarmonicResidual(const Game<Scalar>& u) {
  const StrategySpace& space = u.space();
  Vector<Scalar> r = Vector<Scalar>::Zero(space.num_profiles());
  for (int i = 0; i < u.num_players(); ++i) {
    // Σ_{y ~_i x} [u_i(x) − u_i(y)] = |A_i| u_i(x) − Σ_{y ~_i x} u_i(y).
    const Scalar size(space.actions(i));
    r += size * u.utility(i) - FiberSums(space, u.utility(i), i);
  }
  return r;
}

template <typename Scalar>
bool IsHarmonic(const Game<Scalar>& u, double tolerance) {
  const Vector<Scalar> r = HarmonicResidual(u);
  for (Eigen::Index x = 0; x < r.size(); ++x)
    if (!ScalarTraits<Scalar>::IsZero(r(x), tolerance)) return false;
  return true;
}

template <typename Scalar>
Game<Scalar> GameFromPotential(const PotentialFunction<Scalar>& phi) {
  if (phi.values.size() != phi.space.num_profiles())
    throw InvalidArgument("potential table length must equal |X|");
  return Game<Scalar>(
      phi.space, std::vector<Vector<Scalar>>(phi.space.num_players(),
                                             phi.values));
}

Game<double> ToFloat(const Game<Rational>& u) {
  std::vector<Vector<double>> out;
  for (const auto& t : u.utilities()) {
    Vector<double> d(t.size());
    for (Eigen::Index x = 0; x < t.size(); ++x)
      d(x) = ScalarTraits<Rational>::ToDouble(t(x));
    out.push_back(std::move(d));
  }
  return Game<double>(u.space(), std::move(out));
}

#define GAMESEP_INSTANTIATE(S)                                              \
  template Vector<S> FiberSums(const StrategySpace&, const Vector<S>&, int); \
  template Game<S> Normalize(const Game<S>&);                               \
  template bool IsNormalized(const Game<S>&, double);                       \
  template bool IsNonstrategic(const Game<S>&, double);                     \
  template Vector<S> HarmonicResidual(const Game<S>&);                      \
  template bool IsHarmonic(const Game<S>&, double);                         \
  template Game<S> GameFromPotential(const PotentialFunction<S>&);

GAMESEP_INSTANTIATE(double)
GAMESEP_INSTANTIATE(Rational)

#undef GAMESEP_INSTANTIATE

}  // namespace gamesep
