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

#include "gamesep/linear_solve.hpp"

#include <vector>

#include "gamesep/errors.hpp"

namespace gamesep {

template <>
std::optional<Vector<Rational>> SolveConsistent(const Matrix<Rational>& a,
                                                const Vector<Rational>& b,
                                                double /*tolerance*/) {
  if (a.rows() != b.size()) throw InvalidArgument("row count mismatch");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Matrix<Rational> m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;

  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index k = c; k <= cols; ++k) m(r, k) *= inv;
    for (Eigen::Index q = 0; q < rows; ++q) {
      if (q == r || m(q, c).is_zero()) continue;
      const Rational factor = m(q, c);
      for (Eigen::Index k = c; k <= cols; ++k) m(q, k) -= factor * m(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (Eigen::Index q = r; q < rows; ++q)
    if (!m(q, cols).is_zero()) return std::nullopt;

  Vector<Rational> x = Vector<Rational>::Zero(cols);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k)
    x(pivot_cols[k]) = m(static_cast<Eigen::Index>(k), cols);
  return x;
}

template <>
std::optional<Vector<double>> SolveConsistent(const Matrix<double>& a,
                                              const Vector<double>& b,
                                              double tolerance) {
  if (a.rows() != b.size()) throw InvalidArgument("row count mismatch");
  if (a.cols() == 0) {
    if (b.size() == 0 || b.cwiseAbs().maxCoeff() <= tolerance)
      return Vector<double>();
    return std::nullopt;
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix<double>> cod(a);
  Vector<double> x = cod.solve(b);
  const double scale = b.size() == 0 ? 0.0 : b.cwiseAbs().maxCoeff();
  const double residual =
      b.size() == 0 ? 0.0 : (a * x - b).cwiseAbs().maxCoeff();
  if (residual > tolerance * (1.0 + scale)) return std::nullopt;
  return x;
}

}  // namespace gamesep
