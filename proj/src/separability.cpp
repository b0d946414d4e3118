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

#include "gamesep/separability.hpp"

#include <algorithm>
#include <string>

#include "gamesep/errors.hpp"
#include "gamesep/linear_solve.hpp"

namespace gamesep {
namespace {

// Index in space.Restrict(inner) of the restriction of y ∈ space.Restrict(outer).
ProfileIndex ProjectWithin(const StrategySpace& space, NodeSet outer,
                           NodeSet inner, ProfileIndex y) {
  const std::vector<int> members = outer.members();
  std::vector<int> actions(members.size());
  for (int k = static_cast<int>(members.size()) - 1; k >= 0; --k) {
    const int count = space.actions(members[k]);
    actions[k] = static_cast<int>(y % count);
    y /= count;
  }
  ProfileIndex out = 0;
  for (std::size_t k = 0; k < members.size(); ++k)
    if (inner.contains(members[k]))
      out = out * space.actions(members[k]) + actions[k];
  return out;
}

// table_outer(y) += table_inner(y_inner) for every y in Restrict(outer).
template <typename Scalar>
void AccumulateInto(const StrategySpace& space, NodeSet outer,
                    Vector<Scalar>& table_outer, NodeSet inner,
                    const Vector<Scalar>& table_inner) {
  for (Eigen::Index y = 0; y < table_outer.size(); ++y)
    table_outer(y) += table_inner(ProjectWithin(space, outer, inner, y));
}

template <typename Scalar>
double Scale(const Vector<Scalar>& f) {
  return ScalarTraits<Scalar>::ToDouble(MaxAbs(f));
}

std::set<NodeSet> MaximalOf(const std::vector<NodeSet>& sets) {
  std::set<NodeSet> out;
  for (NodeSet s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [s](NodeSet t) {
      return s.IsStrictSubsetOf(t);
    });
    if (!dominated) out.insert(s);
  }
  return out;
}

void CheckLength(const StrategySpace& space, Eigen::Index size) {
  if (size != space.num_profiles())
    throw InvalidArgument("table length " + std::to_string(size) +
                          " does not match |X| = " +
                          std::to_string(space.num_profiles()));
}

// Strategic interaction sets of player i: S ∋ i, |S| >= 2, Φ_S(u_i) ≢ 0.
template <typename Scalar>
std::vector<NodeSet> StrategicSupport(
    const InteractionDecomposition<Scalar>& dec, int i) {
  std::vector<NodeSet> out;
  for (NodeSet s : dec.Support())
    if (s.contains(i) && s.size() >= 2) out.push_back(s);
  return out;
}

}  // namespace

template <typename Scalar>
Vector<Scalar> InteractionDecomposition<Scalar>::component(
    NodeSet subset) const {
  if (auto it = components_.find(subset); it != components_.end())
    return it->second;
  return Vector<Scalar>::Zero(space_.Restrict(subset).num_profiles());
}

template <typename Scalar>
std::vector<NodeSet> InteractionDecomposition<Scalar>::Support() const {
  std::vector<NodeSet> out;
  for (const auto& [s, table] : components_)
    if (!s.empty()) out.push_back(s);
  return out;
}

template <typename Scalar>
Vector<Scalar> InteractionDecomposition<Scalar>::Reconstruct() const {
  Vector<Scalar> out = Vector<Scalar>::Zero(space_.num_profiles());
  for (const auto& [s, table] : components_)
    out += Embed(space_, s, table);
  return out;
}

template <typename Scalar>
bool DependsOn(const StrategySpace& space, const Vector<Scalar>& f, int i,
               double tolerance) {
  CheckLength(space, f.size());
  const double bound = tolerance * (1.0 + Scale(f));
  for (ProfileIndex x = 0; x < space.num_profiles(); ++x) {
    const int a = space.ActionOf(x, i);
    if (a == 0) continue;
    if (!ScalarTraits<Scalar>::IsZero(f(x) - f(x - a * space.stride(i)), bound))
      return true;
  }
  return false;
}

template <typename Scalar>
InteractionDecomposition<Scalar> MobiusDecompose(
    const StrategySpace& space, const Vector<Scalar>& f,
    const SeparabilityOptions& options) {
  CheckLength(space, f.size());
  const ProfileIndex z = options.reference;
  if (z < 0 || z >= space.num_profiles())
    throw InvalidArgument("reference profile out of range");
  const double scale = Scale(f);

  // Coordinates f ignores cannot appear in any nonzero component.
  NodeSet relevant;
  for (int i = 0; i < space.num_players(); ++i)
    if (DependsOn(space, f, i, options.tolerance)) relevant = relevant.with(i);

  std::map<NodeSet, Vector<Scalar>> components;
  const NodeSet::Bits mask = relevant.bits();
  for (NodeSet::Bits bits = mask;; bits = (bits - 1) & mask) {
    const NodeSet subset(bits);
    const StrategySpace sub = space.Restrict(subset);
    const std::vector<int> members = subset.members();

    // g(y) = f(y on S, z elsewhere).
    Vector<Scalar> g(sub.num_profiles());
    for (ProfileIndex y = 0; y < sub.num_profiles(); ++y) {
      ProfileIndex x = z;
      for (std::size_t k = 0; k < members.size(); ++k)
        x = space.WithAction(x, members[k], sub.ActionOf(y, static_cast<int>(k)));
      g(y) = f(x);
    }
    // Apply the difference operator g -> g − g|_{x_s = z_s} along each s ∈ S.
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int pos = static_cast<int>(k);
      const ProfileIndex stride = sub.stride(pos);
      const int zs = space.ActionOf(z, members[k]);
      for (ProfileIndex y = 0; y < sub.num_profiles(); ++y) {
        if (sub.ActionOf(y, pos) != 0) continue;
        const Scalar base = g(y + zs * stride);
        for (int a = 0; a < sub.actions(pos); ++a) g(y + a * stride) -= base;
      }
    }
    if (subset.empty() || !IsZeroTable(g, options.tolerance, scale))
      components.emplace(subset, std::move(g));
    if (bits == 0) break;
  }
  return InteractionDecomposition<Scalar>(space, z, std::move(components));
}

template <typename Scalar>
HGraph MinimalHGraph(const StrategySpace& space, const Vector<Scalar>& f,
                     const SeparabilityOptions& options) {
  const auto dec = MobiusDecompose(space, f, options);
  return HGraph(space.num_players(), MaximalOf(dec.Support()));
}

template <typename Scalar>
bool IsHSeparable(const StrategySpace& space, const Vector<Scalar>& f,
                  const HGraph& h, const SeparabilityOptions& options) {
  return Preceq(MinimalHGraph(space, f, options), h);
}

template <typename Scalar>
std::map<NodeSet, Vector<Scalar>> ExtractHTerms(
    const StrategySpace& space, const Vector<Scalar>& f, const HGraph& h,
    const SeparabilityOptions& options) {
  if (h.node_count() != space.num_players())
    throw InvalidArgument("H-graph and strategy space disagree on node count");
  const auto dec = MobiusDecompose(space, f, options);
  std::map<NodeSet, Vector<Scalar>> terms;
  for (NodeSet j : h.hyperlinks())
    terms.emplace(j, Vector<Scalar>::Zero(space.Restrict(j).num_profiles()));

  for (const auto& [s, table] : dec.components()) {
    if (s.empty() && h.empty()) continue;
    auto host = std::find_if(terms.begin(), terms.end(),
                             [s](const auto& t) { return s.IsSubsetOf(t.first); });
    if (host == terms.end())
      throw InvalidArgument("function is not separable on " + ToString(h) +
                            ": interaction " + s.ToString() + " uncovered");
    AccumulateInto(space, host->first, host->second, s, table);
  }
  return terms;
}

template <typename Scalar>
bool OracleIsSeparable(const StrategySpace& space, const Vector<Scalar>& f,
                       const HGraph& h, double tolerance) {
  CheckLength(space, f.size());
  if (h.node_count() != space.num_players())
    throw InvalidArgument("H-graph and strategy space disagree on node count");
  Eigen::Index cols = 1;
  for (NodeSet j : h.hyperlinks()) cols += space.Restrict(j).num_profiles();
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(space.num_profiles(), cols);
  for (ProfileIndex x = 0; x < space.num_profiles(); ++x) {
    basis(x, 0) = Scalar(1);
    Eigen::Index offset = 1;
    for (NodeSet j : h.hyperlinks()) {
      basis(x, offset + space.Project(x, j)) = Scalar(1);
      offset += space.Restrict(j).num_profiles();
    }
  }
  return InColumnSpan(basis, f, tolerance);
}

template <typename Scalar>
FdhGraph MinimalFdh(const Game<Scalar>& u, const SeparabilityOptions& options) {
  std::set<DirectedHyperlink> out;
  for (int i = 0; i < u.num_players(); ++i) {
    const auto dec = MobiusDecompose(u.space(), u.utility(i), options);
    for (NodeSet s : MaximalOf(StrategicSupport(dec, i)))
      out.insert({i, s.without(i)});
  }
  return FdhGraph(u.num_players(), std::move(out));
}

template <typename Scalar>
bool IsFSeparable(const Game<Scalar>& u, const FdhGraph& f,
                  const SeparabilityOptions& options) {
  return Preceq(MinimalFdh(u, options), f);
}

template <typename Scalar>
bool OracleIsFSeparable(const Game<Scalar>& u, const FdhGraph& f,
                        double tolerance) {
  for (int i = 0; i < u.num_players(); ++i) {
    const HGraph local =
        Union(LocalHGraph(f, i), HGraph(f.node_count(), {NodeSet::Singleton(i)}));
    if (!OracleIsSeparable(u.space(), u.utility(i), local, tolerance))
      return false;
  }
  return true;
}

template <typename Scalar>
FdhTerms<Scalar> ExtractFTerms(const Game<Scalar>& u, const FdhGraph& f,
                               const SeparabilityOptions& options) {
  const StrategySpace& space = u.space();
  if (f.node_count() != u.num_players())
    throw InvalidArgument("FDH-graph and game disagree on node count");
  FdhTerms<Scalar> out;
  for (const auto& d : f.hyperlinks())
    out.terms.emplace(
        d, Vector<Scalar>::Zero(space.Restrict(d.head.with(d.tail)).num_profiles()));

  for (int i = 0; i < u.num_players(); ++i) {
    out.own.push_back(Vector<Scalar>::Zero(space.actions(i)));
    out.nonstrategic.push_back(Vector<Scalar>::Zero(space.num_profiles()));
    const auto dec = MobiusDecompose(space, u.utility(i), options);
    const std::set<NodeSet> heads = f.HeadsAt(i);
    for (const auto& [s, table] : dec.components()) {
      if (!s.contains(i)) {
        out.nonstrategic[i] += Embed(space, s, table);
        continue;
      }
      const NodeSet others = s.without(i);
      auto head = std::find_if(heads.begin(), heads.end(), [others](NodeSet h) {
        return others.IsSubsetOf(h);
      });
      if (head == heads.end()) {
        if (others.empty()) {
          out.own[i] += table;
          continue;
        }
        throw InvalidArgument("game is not separable on " + ToString(f) +
                              ": player " + std::to_string(i) +
                              " interacts with " + others.ToString());
      }
      const DirectedHyperlink key{i, *head};
      AccumulateInto(space, head->with(i), out.terms.at(key), s, table);
    }
  }
  return out;
}

template <typename Scalar>
DiGraph MinimalGraph(const Game<Scalar>& u, const SeparabilityOptions& options) {
  return GraphFromFdh(MinimalFdh(u, options));
}

template <typename Scalar>
Vector<Scalar> Embed(const StrategySpace& space, NodeSet subset,
                     const Vector<Scalar>& table) {
  Vector<Scalar> out(space.num_profiles());
  for (ProfileIndex x = 0; x < space.num_profiles(); ++x)
    out(x) = table(space.Project(x, subset));
  return out;
}

#define GAMESEP_INSTANTIATE(S)                                               \
  template class InteractionDecomposition<S>;                                \
  template bool DependsOn(const StrategySpace&, const Vector<S>&, int,       \
                          double);                                           \
  template InteractionDecomposition<S> MobiusDecompose(                      \
      const StrategySpace&, const Vector<S>&, const SeparabilityOptions&);   \
  template HGraph MinimalHGraph(const StrategySpace&, const Vector<S>&,      \
                                const SeparabilityOptions&);                 \
  template bool IsHSeparable(const StrategySpace&, const Vector<S>&,         \
                             const HGraph&, const SeparabilityOptions&);     \
  template std::map<NodeSet, Vector<S>> ExtractHTerms(                       \
      const StrategySpace&, const Vector<S>&, const HGraph&,                 \
      const SeparabilityOptions&);                                           \
  template bool OracleIsSeparable(const StrategySpace&, const Vector<S>&,    \
                                  const HGraph&, double);                    \
  template FdhGraph MinimalFdh(const Game<S>&, const SeparabilityOptions&);  \
  template bool IsFSeparable(const Game<S>&, const FdhGraph&,                \
                             const SeparabilityOptions&);                    \
  template bool OracleIsFSeparable(const Game<S>&, const FdhGraph&, double); \
  template FdhTerms<S> ExtractFTerms(const Game<S>&, const FdhGraph&,        \
                                     const SeparabilityOptions&);            \
  template DiGraph MinimalGraph(const Game<S>&, const SeparabilityOptions&); \
  template Vector<S> Embed(const StrategySpace&, NodeSet, const Vector<S>&);

GAMESEP_INSTANTIATE(double)
GAMESEP_INSTANTIATE(Rational)

#undef GAMESEP_INSTANTIATE

}  // namespace gamesep
