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

#include "gamesep/mrf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gamesep/errors.hpp"
#include "gamesep/game.hpp"
#include "gamesep/potential.hpp"
#include "gamesep/separability.hpp"

namespace gamesep {
namespace {

bool RelativelyClose(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max(std::abs(a), std::abs(b));
}

void CheckGraph(const DistributionTable& p, const DiGraph& g) {
  if (g.node_count() != p.space().num_players())
    throw InvalidArgument("graph and distribution disagree on node count");
  if (!g.IsUndirected())
    throw InvalidArgument("Markov properties need an undirected graph");
}

}  // namespace

DistributionTable::DistributionTable(StrategySpace space,
                                     Vector<double> probabilities,
                                     double tolerance)
    : space_(std::move(space)), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != space_.num_profiles())
    throw InvalidArgument("probability table length must equal |X|");
  for (Eigen::Index x = 0; x < probabilities_.size(); ++x)
    if (!(probabilities_(x) > 0.0))
      throw InvalidArgument("probabilities must be strictly positive (entry " +
                            std::to_string(x) + ")");
  if (std::abs(probabilities_.sum() - 1.0) > tolerance)
    throw InvalidArgument("probabilities must sum to one");
}

DistributionTable DistributionTable::Normalized(StrategySpace space,
                                                Vector<double> weights) {
  const double total = weights.sum();
  if (!(total > 0.0)) throw InvalidArgument("weights must have positive sum");
  weights /= total;
  return DistributionTable(std::move(space), std::move(weights));
}

Vector<double> DistributionTable::Marginal(NodeSet subset) const {
  Vector<double> out =
      Vector<double>::Zero(space_.Restrict(subset).num_profiles());
  for (ProfileIndex x = 0; x < space_.num_profiles(); ++x)
    out(space_.Project(x, subset)) += probabilities_(x);
  return out;
}

bool CheckLocalMarkov(const DistributionTable& p, const DiGraph& g,
                      double tolerance) {
  CheckGraph(p, g);
  const StrategySpace& space = p.space();
  const Vector<double>& prob = p.probabilities();
  for (int i = 0; i < space.num_players(); ++i) {
    const NodeSet neighbors = g.OutNeighbors(i);
    const NodeSet closed = neighbors.with(i);
    const Vector<double> m_closed = p.Marginal(closed);
    const Vector<double> m_open = p.Marginal(neighbors);
    const Vector<double> fiber = FiberSums(space, prob, i);
    for (ProfileIndex x = 0; x < space.num_profiles(); ++x) {
      const double given_rest = prob(x) / fiber(x);
      const double given_neighbors = m_closed(space.Project(x, closed)) /
                                     m_open(space.Project(x, neighbors));
      if (!RelativelyClose(given_rest, given_neighbors, tolerance)) return false;
    }
  }
  return true;
}

std::map<NodeSet, Vector<double>> HcFactorize(const DistributionTable& p,
                                              const DiGraph& g,
                                              double tolerance) {
  if (!CheckLocalMarkov(p, g, tolerance))
    throw InvalidArgument("distribution is not Markov with respect to " +
                          ToString(g));
  const StrategySpace& space = p.space();
  const Vector<double> log_p = p.probabilities().array().log().matrix();
  const SeparabilityOptions options{0, tolerance};

  const HGraph cliques = MaximalCliques(g);
  const PotentialFunction<double> phi{space, log_p};
  if (!IsGraphicalOn(GameFromPotential(phi), g, options))
    throw InvariantViolation("log-probability game is not graphical on " +
                             ToString(g));
  const auto dec = MobiusDecompose(space, log_p, options);
  const HGraph minimal(space.num_players(),
                       [&] {
                         std::set<NodeSet> s;
                         for (NodeSet t : dec.Support()) s.insert(t);
                         return s;
                       }());
  if (!Preceq(minimal, cliques))
    throw InvariantViolation("interactions of log P are not inside cliques");

  std::map<NodeSet, Vector<double>> log_factors;
  for (NodeSet c : cliques.hyperlinks())
    log_factors.emplace(c, Vector<double>::Zero(space.Restrict(c).num_profiles()));

  for (const auto& [s, table] : dec.components()) {
    // Smallest clique containing s, lexicographic among equals. The constant
    // lands on the first clique in lexicographic order.
    NodeSet host;
    bool found = false;
    for (NodeSet c : cliques.hyperlinks()) {
      if (!s.IsSubsetOf(c)) continue;
      if (s.empty()) {
        host = c;
        found = true;
        break;
      }
      if (!found || c.size() < host.size()) {
        host = c;
        found = true;
      }
    }
    Vector<double>& target = log_factors.at(host);
    const StrategySpace sub = space.Restrict(host);
    const StrategySpace inner = space.Restrict(s);
    const std::vector<int> members = host.members();
    for (ProfileIndex y = 0; y < sub.num_profiles(); ++y) {
      ProfileIndex z = 0;
      for (std::size_t k = 0; k < members.size(); ++k)
        if (s.contains(members[k]))
          z = z * space.actions(members[k]) + sub.ActionOf(y, static_cast<int>(k));
      target(y) += table(z);
    }
  }

  std::map<NodeSet, Vector<double>> factors;
  for (auto& [c, t] : log_factors) factors.emplace(c, t.array().exp().matrix());
  return factors;
}

Vector<double> FactorProduct(const StrategySpace& space,
                             const std::map<NodeSet, Vector<double>>& factors) {
  Vector<double> out = Vector<double>::Ones(space.num_profiles());
  for (const auto& [c, t] : factors)
    out.array() *= Embed(space, c, t).array();
  return out;
}

}  // namespace gamesep
