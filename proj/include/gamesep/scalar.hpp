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

#ifndef GAMESEP_SCALAR_HPP_
#define GAMESEP_SCALAR_HPP_

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <string_view>

namespace gamesep {

// Exact rational scalar. Expression templates are disabled so that the type
// composes with Eigen expressions.
using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Absolute tolerance used by float-mode predicates.
inline constexpr double kDefaultTolerance = 1e-9;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr const char* kName = "float";

  static bool IsZero(double value, double tolerance) {
    return std::abs(value) <= tolerance;
  }
  static double Abs(double value) { return std::abs(value); }
  static double ToDouble(double value) { return value; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "rational";

  static bool IsZero(const Rational& value, double /*tolerance*/) {
    return value.is_zero();
  }
  static Rational Abs(const Rational& value) { return abs(value); }
  static double ToDouble(const Rational& value) {
    return value.convert_to<double>();
  }
};

template <typename Scalar>
inline bool IsExact() {
  return ScalarTraits<Scalar>::kExact;
}

// max_k |v_k|, or 0 for an empty vector.
template <typename Scalar>
Scalar MaxAbs(const Vector<Scalar>& v) {
  Scalar best(0);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    Scalar a = ScalarTraits<Scalar>::Abs(v(k));
    if (a > best) best = a;
  }
  return best;
}

// Zero test for a whole table. Exact for rationals; in float mode every entry
// must satisfy |v_k| <= tolerance * (1 + scale).
template <typename Scalar>
bool IsZeroTable(const Vector<Scalar>& v, double tolerance, double scale) {
  if constexpr (ScalarTraits<Scalar>::kExact) {
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (!v(k).is_zero()) return false;
    return true;
  } else {
    const double bound = tolerance * (1.0 + scale);
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (std::abs(v(k)) > bound) return false;
    return true;
  }
}

// Parses "p", "p/q", or a decimal/float literal (float literals are rejected
// for Rational). Throws ParseError on malformed input.
Rational ParseRational(std::string_view text);
double ParseDouble(std::string_view text);

// "p" when the denominator is one, "p/q" otherwise.
std::string FormatRational(const Rational& value);

}  // namespace gamesep

#endif  // GAMESEP_SCALAR_HPP_
