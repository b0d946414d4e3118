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

#ifndef GAMESEP_NODE_SET_HPP_
#define GAMESEP_NODE_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gamesep {

// A subset of the dense node range [0, 64), stored as a bit mask.
//
// Ordering is lexicographic on the sorted member lists, so {0,1} < {0,1,2} <
// {0,2} < {1}. This is the order used for every "lexicographically smallest"
// tie-break in the library.
class NodeSet {
 public:
  using Bits = std::uint64_t;
  static constexpr int kMaxNodes = 64;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(Bits bits) : bits_(bits) {}
  NodeSet(std::initializer_list<int> nodes) {
    for (int v : nodes) bits_ |= Bit(v);
  }

  static NodeSet FromNodes(std::span<const int> nodes) {
    NodeSet s;
    for (int v : nodes) s.bits_ |= Bit(v);
    return s;
  }
  static constexpr NodeSet Singleton(int v) { return NodeSet(Bit(v)); }
  // {0, ..., n-1}.
  static constexpr NodeSet Range(int n) {
    return NodeSet(n >= kMaxNodes ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  // Largest member plus one; 0 for the empty set.
  constexpr int bound() const { return kMaxNodes - std::countl_zero(bits_); }

  constexpr NodeSet with(int v) const { return NodeSet(bits_ | Bit(v)); }
  constexpr NodeSet without(int v) const { return NodeSet(bits_ & ~Bit(v)); }

  constexpr bool IsSubsetOf(NodeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool IsStrictSubsetOf(NodeSet other) const {
    return IsSubsetOf(other) && bits_ != other.bits_;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Calls fn(v) for each member in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (Bits b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) {
    return NodeSet(a.bits_ | b.bits_);
  }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) {
    return NodeSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) {
    return NodeSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(NodeSet a, NodeSet b) = default;

  friend constexpr std::strong_ordering operator<=>(NodeSet a, NodeSet b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    const int k = std::countr_zero(a.bits_ ^ b.bits_);
    // Both lists agree below k; exactly one of them contains k.
    const NodeSet& with_k = a.contains(k) ? a : b;
    const NodeSet& other = a.contains(k) ? b : a;
    const Bits above = (k + 1 >= kMaxNodes) ? 0 : (~Bits{0} << (k + 1));
    // If `other` ends before k it is a proper prefix, hence smaller.
    const bool with_k_smaller = (other.bits_ & above) != 0;
    const bool a_smaller = (&with_k == &a) == with_k_smaller;
    return a_smaller ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }

  // "{0,2,5}".
  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    ForEach([&](int v) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    });
    return out + "}";
  }

 private:
  static constexpr Bits Bit(int v) { return Bits{1} << v; }

  Bits bits_ = 0;
};

}  // namespace gamesep

#endif  // GAMESEP_NODE_SET_HPP_
