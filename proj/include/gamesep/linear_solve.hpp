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

#ifndef GAMESEP_LINEAR_SOLVE_HPP_
#define GAMESEP_LINEAR_SOLVE_HPP_

#include <optional>

#include "gamesep/scalar.hpp"

namespace gamesep {

// Finds some x with A x = b, or nullopt when the system is inconsistent.
//
// Rationals: exact Gauss–Jordan elimination, free variables set to zero.
// Doubles: complete orthogonal decomposition (minimum-norm least squares),
// accepted when max |A x − b| <= tolerance · (1 + max |b|).
template <typename Scalar>
std::optional<Vector<Scalar>> SolveConsistent(const Matrix<Scalar>& a,
                                              const Vector<Scalar>& b,
                                              double tolerance = kDefaultTolerance);

template <>
std::optional<Vector<Rational>> SolveConsistent(const Matrix<Rational>& a,
                                                const Vector<Rational>& b,
                                                double tolerance);
template <>
std::optional<Vector<double>> SolveConsistent(const Matrix<double>& a,
                                              const Vector<double>& b,
                                              double tolerance);

// b lies in the column span of A.
template <typename Scalar>
bool InColumnSpan(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                  double tolerance = kDefaultTolerance) {
  return SolveConsistent(a, b, tolerance).has_value();
}

}  // namespace gamesep

#endif  // GAMESEP_LINEAR_SOLVE_HPP_
