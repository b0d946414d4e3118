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

#include "gamesep/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "gamesep/errors.hpp"

namespace gamesep {
namespace {

void CheckNodeCount(int n) {
  if (n < 1 || n > NodeSet::kMaxNodes)
    throw InvalidArgument("node count must be in [1, 64], got " +
                          std::to_string(n));
}

void CheckSameNodes(int a, int b) {
  if (a != b)
    throw InvalidArgument("node-count mismatch: " + std::to_string(a) +
                          " vs " + std::to_string(b));
}

bool WithinRange(NodeSet s, int n) { return s.IsSubsetOf(NodeSet::Range(n)); }

std::set<NodeSet> MaximalSets(const std::set<NodeSet>& sets) {
  std::set<NodeSet> out;
  for (NodeSet s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [s](NodeSet t) {
      return s.IsStrictSubsetOf(t);
    });
    if (!dominated) out.insert(s);
  }
  return out;
}

bool CoveredBy(NodeSet s, const std::set<NodeSet>& sets) {
  return std::any_of(sets.begin(), sets.end(),
                     [s](NodeSet t) { return s.IsSubsetOf(t); });
}

std::map<int, std::set<NodeSet>> HeadsByTail(const FdhGraph& f) {
  std::map<int, std::set<NodeSet>> out;
  for (const auto& d : f.hyperlinks()) out[d.tail].insert(d.head);
  return out;
}

}  // namespace

DiGraph::DiGraph(int node_count, std::set<Link> links)
    : node_count_(node_count), links_(std::move(links)) {
  CheckNodeCount(node_count_);
  for (const auto& [i, j] : links_) {
    if (i < 0 || j < 0 || i >= node_count_ || j >= node_count_)
      throw InvalidArgument("link (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
    if (i == j)
      throw InvalidArgument("self-loop at node " + std::to_string(i));
  }
}

NodeSet DiGraph::OutNeighbors(int i) const {
  NodeSet out;
  for (auto it = links_.lower_bound({i, 0});
       it != links_.end() && it->first == i; ++it)
    out = out.with(it->second);
  return out;
}

bool DiGraph::IsUndirected() const {
  return std::all_of(links_.begin(), links_.end(), [this](const Link& l) {
    return links_.contains({l.second, l.first});
  });
}

HGraph::HGraph(int node_count, std::set<NodeSet> hyperlinks)
    : node_count_(node_count), hyperlinks_(std::move(hyperlinks)) {
  CheckNodeCount(node_count_);
  for (NodeSet s : hyperlinks_) {
    if (s.empty()) throw InvalidArgument("empty hyperlink");
    if (!WithinRange(s, node_count_))
      throw InvalidArgument("hyperlink " + s.ToString() + " out of range");
  }
}

HGraph HGraph::Trivial(int node_count) {
  return HGraph(node_count, {NodeSet::Range(node_count)});
}

FdhGraph::FdhGraph(int node_count, std::set<DirectedHyperlink> hyperlinks)
    : node_count_(node_count), hyperlinks_(std::move(hyperlinks)) {
  CheckNodeCount(node_count_);
  for (const auto& d : hyperlinks_) {
    if (d.tail < 0 || d.tail >= node_count_)
      throw InvalidArgument("tail " + std::to_string(d.tail) + " out of range");
    if (d.head.empty())
      throw InvalidArgument("empty head at tail " + std::to_string(d.tail));
    if (!WithinRange(d.head, node_count_))
      throw InvalidArgument("head " + d.head.ToString() + " out of range");
    if (d.head.contains(d.tail))
      throw InvalidArgument("tail " + std::to_string(d.tail) +
                            " contained in its head");
  }
}

std::set<NodeSet> FdhGraph::HeadsAt(int i) const {
  std::set<NodeSet> out;
  for (auto it = hyperlinks_.lower_bound({i, NodeSet()});
       it != hyperlinks_.end() && it->tail == i; ++it)
    out.insert(it->head);
  return out;
}

HGraph Simplify(const HGraph& h) {
  return HGraph(h.node_count(), MaximalSets(h.hyperlinks()));
}

FdhGraph Simplify(const FdhGraph& f) {
  std::set<DirectedHyperlink> out;
  for (const auto& [tail, heads] : HeadsByTail(f))
    for (NodeSet head : MaximalSets(heads)) out.insert({tail, head});
  return FdhGraph(f.node_count(), std::move(out));
}

bool IsSimple(const HGraph& h) { return Simplify(h) == h; }
bool IsSimple(const FdhGraph& f) { return Simplify(f) == f; }

bool Preceq(const HGraph& a, const HGraph& b) {
  CheckSameNodes(a.node_count(), b.node_count());
  return std::all_of(a.hyperlinks().begin(), a.hyperlinks().end(),
                     [&b](NodeSet s) { return CoveredBy(s, b.hyperlinks()); });
}

bool Preceq(const FdhGraph& a, const FdhGraph& b) {
  CheckSameNodes(a.node_count(), b.node_count());
  const auto heads_b = HeadsByTail(b);
  for (const auto& d : a.hyperlinks()) {
    auto it = heads_b.find(d.tail);
    if (it == heads_b.end() || !CoveredBy(d.head, it->second)) return false;
  }
  return true;
}

HGraph Intersect(const HGraph& a, const HGraph& b) {
  CheckSameNodes(a.node_count(), b.node_count());
  std::set<NodeSet> out;
  for (NodeSet s : a.hyperlinks())
    for (NodeSet t : b.hyperlinks())
      if (NodeSet m = s & t; !m.empty()) out.insert(m);
  return HGraph(a.node_count(), std::move(out));
}

FdhGraph Intersect(const FdhGraph& a, const FdhGraph& b) {
  CheckSameNodes(a.node_count(), b.node_count());
  const auto heads_b = HeadsByTail(b);
  std::set<DirectedHyperlink> out;
  for (const auto& d : a.hyperlinks()) {
    auto it = heads_b.find(d.tail);
    if (it == heads_b.end()) continue;
    for (NodeSet t : it->second)
      if (NodeSet m = d.head & t; !m.empty()) out.insert({d.tail, m});
  }
  return FdhGraph(a.node_count(), std::move(out));
}

HGraph Union(const HGraph& a, const HGraph& b) {
  CheckSameNodes(a.node_count(), b.node_count());
  std::set<NodeSet> out = a.hyperlinks();
  out.insert(b.hyperlinks().begin(), b.hyperlinks().end());
  return HGraph(a.node_count(), std::move(out));
}

FdhGraph Union(const FdhGraph& a, const FdhGraph& b) {
  CheckSameNodes(a.node_count(), b.node_count());
  std::set<DirectedHyperlink> out = a.hyperlinks();
  out.insert(b.hyperlinks().begin(), b.hyperlinks().end());
  return FdhGraph(a.node_count(), std::move(out));
}

FdhGraph FdhFromGraph(const DiGraph& g) {
  std::set<DirectedHyperlink> out;
  for (int i = 0; i < g.node_count(); ++i)
    if (NodeSet n = g.OutNeighbors(i); !n.empty()) out.insert({i, n});
  return FdhGraph(g.node_count(), std::move(out));
}

DiGraph GraphFromFdh(const FdhGraph& f) {
  std::set<DiGraph::Link> links;
  for (const auto& d : f.hyperlinks())
    d.head.ForEach([&](int j) { links.insert({d.tail, j}); });
  return DiGraph(f.node_count(), std::move(links));
}

FdhGraph FdhFromHGraph(const HGraph& h) {
  std::set<DirectedHyperlink> out;
  for (NodeSet s : h.hyperlinks()) {
    if (s.size() < 2) continue;
    s.ForEach([&](int i) { out.insert({i, s.without(i)}); });
  }
  return FdhGraph(h.node_count(), std::move(out));
}

HGraph HGraphFromFdh(const FdhGraph& f) {
  std::set<NodeSet> out;
  for (const auto& d : f.hyperlinks()) out.insert(d.head.with(d.tail));
  return HGraph(f.node_count(), std::move(out));
}

FdhGraph UnderlyingUndirected(const FdhGraph& f) {
  return FdhFromHGraph(HGraphFromFdh(f));
}

bool IsUndirected(const FdhGraph& f) {
  for (const auto& d : f.hyperlinks()) {
    const NodeSet all = d.head.with(d.tail);
    bool closed = true;
    d.head.ForEach([&](int j) {
      if (!f.hyperlinks().contains({j, all.without(j)})) closed = false;
    });
    if (!closed) return false;
  }
  return true;
}

HGraph LocalHGraph(const FdhGraph& f, int i) {
  std::set<NodeSet> out;
  for (NodeSet head : f.HeadsAt(i)) out.insert(head.with(i));
  if (NodeSet rest = NodeSet::Range(f.node_count()).without(i); !rest.empty())
    out.insert(rest);
  return HGraph(f.node_count(), std::move(out));
}

namespace {

void BronKerbosch(NodeSet r, NodeSet p, NodeSet x,
                  const std::vector<NodeSet>& adj, std::set<NodeSet>& out) {
  if (p.empty() && x.empty()) {
    out.insert(r);
    return;
  }
  // Pivot: the vertex of P ∪ X with most neighbours in P.
  int pivot = -1;
  int best = -1;
  (p | x).ForEach([&](int u) {
    int c = (p & adj[u]).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  (p - adj[pivot]).ForEach([&](int v) {
    BronKerbosch(r.with(v), p & adj[v], x & adj[v], adj, out);
    p = p.without(v);
    x = x.with(v);
  });
}

}  // namespace

HGraph MaximalCliques(const DiGraph& g) {
  if (!g.IsUndirected())
    throw InvalidArgument("maximal cliques require an undirected graph");
  if (g.node_count() > kMaxCliqueNodes)
    throw SizeLimitExceeded("clique enumeration limited to " +
                            std::to_string(kMaxCliqueNodes) + " nodes");
  std::vector<NodeSet> adj(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) adj[i] = g.OutNeighbors(i);
  std::set<NodeSet> cliques;
  BronKerbosch(NodeSet(), NodeSet::Range(g.node_count()), NodeSet(), adj,
               cliques);
  return HGraph(g.node_count(), std::move(cliques));
}

DiGraph RingGraph(int n) {
  if (n < 3) throw InvalidArgument("ring needs at least 3 nodes");
  std::set<DiGraph::Link> links;
  for (int i = 0; i < n; ++i) {
    links.insert({i, (i + 1) % n});
    links.insert({(i + 1) % n, i});
  }
  return DiGraph(n, std::move(links));
}

DiGraph LineGraph(int n) {
  std::set<DiGraph::Link> links;
  for (int i = 0; i + 1 < n; ++i) {
    links.insert({i, i + 1});
    links.insert({i + 1, i});
  }
  return DiGraph(n, std::move(links));
}

DiGraph CompleteGraph(int n) {
  std::set<DiGraph::Link> links;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) links.insert({i, j});
  return DiGraph(n, std::move(links));
}

DiGraph EmptyGraph(int n) { return DiGraph(n); }

std::string ToString(const HGraph& h) {
  std::string out = "{";
  bool first = true;
  for (NodeSet s : h.hyperlinks()) {
    if (!first) out += ", ";
    out += s.ToString();
    first = false;
  }
  return out + "}";
}

std::string ToString(const FdhGraph& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& d : f.hyperlinks()) {
    if (!first) out += ", ";
    out += "(" + std::to_string(d.tail) + "," + d.head.ToString() + ")";
    first = false;
  }
  return out + "}";
}

std::string ToString(const DiGraph& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, j] : g.links()) {
    if (!first) out += ", ";
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace gamesep
