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

#include "gamesep/strategy_space.hpp"

#include <string>

#include "gamesep/errors.hpp"

namespace gamesep {

StrategySpace::StrategySpace(std::vector<int> action_counts,
                             const SizeLimits& limits)
    : counts_(std::move(action_counts)) {
  if (counts_.empty()) throw InvalidArgument("a game needs at least one player");
  if (num_players() > limits.max_players || num_players() > NodeSet::kMaxNodes)
    throw SizeLimitExceeded("too many players: " +
                            std::to_string(num_players()) + " > " +
                            std::to_string(limits.max_players));
  strides_.assign(counts_.size(), 1);
  num_profiles_ = 1;
  for (int i = num_players() - 1; i >= 0; --i) {
    if (counts_[i] < 1)
      throw InvalidArgument("player " + std::to_string(i) +
                            " has no actions");
    strides_[i] = num_profiles_;
    num_profiles_ *= counts_[i];
    if (num_profiles_ > limits.max_profiles)
      throw SizeLimitExceeded("profile space exceeds " +
                              std::to_string(limits.max_profiles) +
                              " profiles");
  }
}

Profile StrategySpace::Decode(ProfileIndex x) const {
  Profile out(counts_.size());
  for (int i = 0; i < num_players(); ++i) out[i] = ActionOf(x, i);
  return out;
}

ProfileIndex StrategySpace::Encode(std::span<const int> profile) const {
  if (static_cast<int>(profile.size()) != num_players())
    throw InvalidArgument("profile has wrong length");
  ProfileIndex x = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (profile[i] < 0 || profile[i] >= counts_[i])
      throw InvalidArgument("action out of range for player " +
                            std::to_string(i));
    x += profile[i] * strides_[i];
  }
  return x;
}

StrategySpace StrategySpace::Restrict(NodeSet subset) const {
  StrategySpace out;
  subset.ForEach([&](int i) { out.counts_.push_back(counts_[i]); });
  out.strides_.assign(out.counts_.size(), 1);
  out.num_profiles_ = 1;
  for (int k = out.num_players() - 1; k >= 0; --k) {
    out.strides_[k] = out.num_profiles_;
    out.num_profiles_ *= out.counts_[k];
  }
  return out;
}

ProfileIndex StrategySpace::Project(ProfileIndex x, NodeSet subset) const {
  ProfileIndex out = 0;
  subset.ForEach([&](int i) { out = out * counts_[i] + ActionOf(x, i); });
  return out;
}

bool IComparable(const StrategySpace& space, ProfileIndex x, ProfileIndex y,
                 int i) {
  return x - space.ActionOf(x, i) * space.stride(i) ==
         y - space.ActionOf(y, i) * space.stride(i);
}

}  // namespace gamesep
