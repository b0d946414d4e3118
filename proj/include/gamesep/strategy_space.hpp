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

#ifndef GAMESEP_STRATEGY_SPACE_HPP_
#define GAMESEP_STRATEGY_SPACE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "gamesep/node_set.hpp"

namespace gamesep {

using ProfileIndex = std::int64_t;
using Profile = std::vector<int>;

// Guards on dense table sizes.
struct SizeLimits {
  ProfileIndex max_profiles = ProfileIndex{1} << 20;
  int max_players = 16;
};

// Product space X = A_0 × ... × A_{n-1} with |A_i| >= 1.
//
// Profiles are indexed lexicographically with player 0 most significant:
//   index(x) = Σ_i x_i · Π_{j>i} |A_j|.
class StrategySpace {
 public:
  // Throws InvalidArgument for empty or non-positive counts and
  // SizeLimitExceeded when `limits` are violated.
  explicit StrategySpace(std::vector<int> action_counts,
                         const SizeLimits& limits = {});

  // Binary actions for n players.
  static StrategySpace Binary(int num_players, const SizeLimits& limits = {}) {
    return StrategySpace(std::vector<int>(num_players, 2), limits);
  }

  int num_players() const { return static_cast<int>(counts_.size()); }
  int actions(int i) const { return counts_[i]; }
  const std::vector<int>& action_counts() const { return counts_; }
  ProfileIndex num_profiles() const { return num_profiles_; }
  ProfileIndex stride(int i) const { return strides_[i]; }
  NodeSet players() const { return NodeSet::Range(num_players()); }

  int ActionOf(ProfileIndex x, int i) const {
    return static_cast<int>((x / strides_[i]) % counts_[i]);
  }
  ProfileIndex WithAction(ProfileIndex x, int i, int a) const {
    return x + (a - ActionOf(x, i)) * strides_[i];
  }

  Profile Decode(ProfileIndex x) const;
  ProfileIndex Encode(std::span<const int> profile) const;

  // Subspace over the players in `subset`, in increasing player order.
  StrategySpace Restrict(NodeSet subset) const;
  // Index of x_S in Restrict(subset).
  ProfileIndex Project(ProfileIndex x, NodeSet subset) const;

  friend bool operator==(const StrategySpace& a, const StrategySpace& b) {
    return a.counts_ == b.counts_;
  }

 private:
  StrategySpace() = default;

  std::vector<int> counts_;
  std::vector<ProfileIndex> strides_;
  ProfileIndex num_profiles_ = 1;
};

// x ~_i y: x and y agree on every coordinate except possibly i.
bool IComparable(const StrategySpace& space, ProfileIndex x, ProfileIndex y,
                 int i);

}  // namespace gamesep

#endif  // GAMESEP_STRATEGY_SPACE_HPP_
