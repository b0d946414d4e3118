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

// Clique factorization of strictly positive distributions that are Markov
// with respect to an undirected graph. The distribution is read as the
// potential game u_i = log P for every player, whose minimal separability
// structure must then sit inside the maximal cliques of the graph.

#ifndef GAMESEP_MRF_HPP_
#define GAMESEP_MRF_HPP_

#include <map>

#include "gamesep/hypergraph.hpp"
#include "gamesep/scalar.hpp"
#include "gamesep/strategy_space.hpp"

namespace gamesep {

// Relative tolerance for conditional-probability and reconstruction checks.
inline constexpr double kMarkovTolerance = 1e-7;

// Strictly positive probability table over X.
class DistributionTable {
 public:
  // Throws InvalidArgument on a length mismatch, a non-positive entry, or a
  // total that differs from one by more than `tolerance`.
  DistributionTable(StrategySpace space, Vector<double> probabilities,
                    double tolerance = kMarkovTolerance);

  // Divides by the total first. Entries must still be strictly positive.
  static DistributionTable Normalized(StrategySpace space,
                                      Vector<double> weights);

  const StrategySpace& space() const { return space_; }
  const Vector<double>& probabilities() const { return probabilities_; }

  // P(X_S = x_S) for every x_S ∈ space().Restrict(subset).
  Vector<double> Marginal(NodeSet subset) const;

 private:
  StrategySpace space_;
  Vector<double> probabilities_;
};

// For every node i and profile x:
//   P(x_i | x_{−i}) = P(x_i | x_{N_i})
// within relative tolerance. Throws InvalidArgument for a directed graph or
// a node-count mismatch.
bool CheckLocalMarkov(const DistributionTable& p, const DiGraph& g,
                      double tolerance = kMarkovTolerance);

// Maximal clique -> strictly positive factor over space.Restrict(clique),
// with Π_C ζ_C(x_C) = P(x). Interaction components of log P go to the
// smallest (then lexicographically first) maximal clique containing them;
// the constant goes to the lexicographically first clique.
//
// Throws InvalidArgument if CheckLocalMarkov fails and InvariantViolation if
// the interaction structure of log P escapes the cliques.
std::map<NodeSet, Vector<double>> HcFactorize(
    const DistributionTable& p, const DiGraph& g,
    double tolerance = kMarkovTolerance);

// Π_C ζ_C(x_C) for every x.
Vector<double> FactorProduct(const StrategySpace& space,
                             const std::map<NodeSet, Vector<double>>& factors);

}  // namespace gamesep

#endif  // GAMESEP_MRF_HPP_
