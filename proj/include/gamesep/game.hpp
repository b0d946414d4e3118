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

// Finite strategic-form games stored as dense utility tables, one per player,
// in profile-index order. Games are templated on the scalar; the library is
// instantiated for `double` and `Rational`.

#ifndef GAMESEP_GAME_HPP_
#define GAMESEP_GAME_HPP_

#include <utility>
#include <vector>

#include "gamesep/errors.hpp"
#include "gamesep/scalar.hpp"
#include "gamesep/strategy_space.hpp"

namespace gamesep {

template <typename Scalar>
class Game {
 public:
  using Table = Vector<Scalar>;

  Game(StrategySpace space, std::vector<Table> utilities)
      : space_(std::move(space)), utilities_(std::move(utilities)) {
    if (static_cast<int>(utilities_.size()) != space_.num_players())
      throw InvalidArgument("one utility table per player required");
    for (const auto& t : utilities_)
      if (t.size() != space_.num_profiles())
        throw InvalidArgument("utility table length must equal |X|");
  }

  static Game Zero(const StrategySpace& space) {
    return Game(space, std::vector<Table>(space.num_players(),
                                          Table::Zero(space.num_profiles())));
  }

  const StrategySpace& space() const { return space_; }
  int num_players() const { return space_.num_players(); }
  const Table& utility(int i) const { return utilities_[i]; }
  const std::vector<Table>& utilities() const { return utilities_; }

  friend Game operator+(const Game& a, const Game& b) {
    return Combine(a, b, [](const Table& x, const Table& y) -> Table {
      return x + y;
    });
  }
  friend Game operator-(const Game& a, const Game& b) {
    return Combine(a, b, [](const Table& x, const Table& y) -> Table {
      return x - y;
    });
  }
  friend Game operator*(const Scalar& s, const Game& a) {
    std::vector<Table> out;
    for (const auto& t : a.utilities_) out.push_back(s * t);
    return Game(a.space_, std::move(out));
  }
  friend bool operator==(const Game& a, const Game& b) {
    return a.space_ == b.space_ && a.utilities_ == b.utilities_;
  }

 private:
  template <typename Op>
  static Game Combine(const Game& a, const Game& b, Op op) {
    if (!(a.space_ == b.space_))
      throw InvalidArgument("games live on different strategy spaces");
    std::vector<Table> out;
    out.reserve(a.utilities_.size());
    for (std::size_t i = 0; i < a.utilities_.size(); ++i)
      out.push_back(op(a.utilities_[i], b.utilities_[i]));
    return Game(a.space_, std::move(out));
  }

  StrategySpace space_;
  std::vector<Table> utilities_;
};

// A scalar function on X, read as the potential of a game.
template <typename Scalar>
struct PotentialFunction {
  StrategySpace space;
  Vector<Scalar> values;
};

// t̄(x) = Σ_{y ~_i x} t(y) for every x.
template <typename Scalar>
Vector<Scalar> FiberSums(const StrategySpace& space, const Vector<Scalar>& t,
                         int i);

// ū_i(x) = u_i(x) − (1/|A_i|) Σ_{y ~_i x} u_i(y).
template <typename Scalar>
Game<Scalar> Normalize(const Game<Scalar>& u);

// Every fiber sum Σ_{y ~_i x} u_i(y) vanishes.
template <typename Scalar>
bool IsNormalized(const Game<Scalar>& u,
                  double tolerance = kDefaultTolerance);

// u_i(x) = u_i(y) for all i and all x ~_i y.
template <typename Scalar>
bool IsNonstrategic(const Game<Scalar>& u,
                    double tolerance = kDefaultTolerance);

template <typename Scalar>
bool StrategicallyEquivalent(const Game<Scalar>& a, const Game<Scalar>& b,
                             double tolerance = kDefaultTolerance) {
  return IsNonstrategic(a - b, tolerance);
}

// r(x) = Σ_i Σ_{y ~_i x} [u_i(x) − u_i(y)].
template <typename Scalar>
Vector<Scalar> HarmonicResidual(const Game<Scalar>& u);

// HarmonicResidual(u) vanishes at every profile.
template <typename Scalar>
bool IsHarmonic(const Game<Scalar>& u, double tolerance = kDefaultTolerance);

// u^φ with u^φ_i = φ for every player.
template <typename Scalar>
Game<Scalar> GameFromPotential(const PotentialFunction<Scalar>& phi);

// Element-wise conversion Rational -> double.
Game<double> ToFloat(const Game<Rational>& u);

}  // namespace gamesep

#endif  // GAMESEP_GAME_HPP_
