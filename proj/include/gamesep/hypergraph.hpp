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

// Graphs, undirected hypergraphs (H-graphs) and forward directed hypergraphs
// (FDH-graphs) over a dense node range [0, n), together with the sub-graph
// order, intersection/union and the conversions between the three kinds.
//
// All three types are immutable values with set semantics.

#ifndef GAMESEP_HYPERGRAPH_HPP_
#define GAMESEP_HYPERGRAPH_HPP_

#include <compare>
#include <set>
#include <string>
#include <utility>

#include "gamesep/node_set.hpp"

namespace gamesep {

// Directed graph without self-loops.
class DiGraph {
 public:
  using Link = std::pair<int, int>;

  explicit DiGraph(int node_count, std::set<Link> links = {});

  int node_count() const { return node_count_; }
  const std::set<Link>& links() const { return links_; }
  bool HasLink(int i, int j) const { return links_.contains({i, j}); }

  // Open out-neighborhood N_i.
  NodeSet OutNeighbors(int i) const;
  // N_i together with i itself.
  NodeSet ClosedNeighborhood(int i) const { return OutNeighbors(i).with(i); }
  // Link set is symmetric.
  bool IsUndirected() const;

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  int node_count_;
  std::set<Link> links_;
};

// Undirected hypergraph: a set of nonempty node subsets.
class HGraph {
 public:
  explicit HGraph(int node_count, std::set<NodeSet> hyperlinks = {});

  int node_count() const { return node_count_; }
  const std::set<NodeSet>& hyperlinks() const { return hyperlinks_; }
  bool empty() const { return hyperlinks_.empty(); }

  // The H-graph with the single hyperlink {0..n-1}.
  static HGraph Trivial(int node_count);

  friend bool operator==(const HGraph&, const HGraph&) = default;

 private:
  int node_count_;
  std::set<NodeSet> hyperlinks_;
};

struct DirectedHyperlink {
  int tail = 0;
  NodeSet head;

  friend auto operator<=>(const DirectedHyperlink&,
                          const DirectedHyperlink&) = default;
  friend bool operator==(const DirectedHyperlink&,
                         const DirectedHyperlink&) = default;
};

// Forward directed hypergraph: hyperlinks (tail, head) with tail not in head
// and head nonempty.
class FdhGraph {
 public:
  explicit FdhGraph(int node_count, std::set<DirectedHyperlink> hyperlinks = {});

  int node_count() const { return node_count_; }
  const std::set<DirectedHyperlink>& hyperlinks() const { return hyperlinks_; }
  bool empty() const { return hyperlinks_.empty(); }

  // Heads of all hyperlinks whose tail is i, in increasing order.
  std::set<NodeSet> HeadsAt(int i) const;

  friend bool operator==(const FdhGraph&, const FdhGraph&) = default;

 private:
  int node_count_;
  std::set<DirectedHyperlink> hyperlinks_;
};

// ---------------------------------------------------------------------------
// Order and lattice operations.

// Keeps only the inclusion-maximal hyperlinks (per tail for FDH-graphs).
HGraph Simplify(const HGraph& h);
FdhGraph Simplify(const FdhGraph& f);

bool IsSimple(const HGraph& h);
bool IsSimple(const FdhGraph& f);

// a ⪯ b: every hyperlink of a is contained in some hyperlink of b (with the
// same tail, for FDH-graphs). Throws InvalidArgument on node-count mismatch.
bool Preceq(const HGraph& a, const HGraph& b);
bool Preceq(const FdhGraph& a, const FdhGraph& b);

// Pairwise intersections of hyperlinks (per tail for FDH-graphs). Empty
// intersections are dropped.
HGraph Intersect(const HGraph& a, const HGraph& b);
FdhGraph Intersect(const FdhGraph& a, const FdhGraph& b);

HGraph Union(const HGraph& a, const HGraph& b);
FdhGraph Union(const FdhGraph& a, const FdhGraph& b);

// ---------------------------------------------------------------------------
// Conversions.

// {(i, N_i) : N_i nonempty}.
FdhGraph FdhFromGraph(const DiGraph& g);
// {(i, j) : j in the head of some hyperlink with tail i}.
DiGraph GraphFromFdh(const FdhGraph& f);
// {(i, J) : {i} ∪ J in L, i not in J}. Singleton hyperlinks map to nothing.
FdhGraph FdhFromHGraph(const HGraph& h);
// {{i} ∪ J : (i, J) in D}.
HGraph HGraphFromFdh(const FdhGraph& f);
// Every node of {i} ∪ J becomes a tail: FdhFromHGraph(HGraphFromFdh(f)).
FdhGraph UnderlyingUndirected(const FdhGraph& f);
// Closed under re-rooting: (i, J) in D implies (j, {i} ∪ J \ {j}) in D.
bool IsUndirected(const FdhGraph& f);

// The local H-graph of player i: {{i} ∪ J : (i, J) in D} ∪ {V \ {i}}.
HGraph LocalHGraph(const FdhGraph& f, int i);

// Maximal cliques of an undirected graph (pivoting Bron–Kerbosch). Isolated
// nodes give singleton cliques. Throws InvalidArgument if the link set is not
// symmetric and SizeLimitExceeded above kMaxCliqueNodes nodes.
inline constexpr int kMaxCliqueNodes = 24;
HGraph MaximalCliques(const DiGraph& g);

// ---------------------------------------------------------------------------
// Common graphs.

// Undirected ring 0-1-...-(n-1)-0.
DiGraph RingGraph(int n);
// Undirected path 0-1-...-(n-1).
DiGraph LineGraph(int n);
DiGraph CompleteGraph(int n);
DiGraph EmptyGraph(int n);

std::string ToString(const HGraph& h);
std::string ToString(const FdhGraph& f);
std::string ToString(const DiGraph& g);

}  // namespace gamesep

#endif  // GAMESEP_HYPERGRAPH_HPP_
