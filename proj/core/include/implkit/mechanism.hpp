// Copyright 2026 The implkit Authors
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

#ifndef IMPLKIT_MECHANISM_HPP_
#define IMPLKIT_MECHANISM_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "implkit/environment.hpp"

namespace implkit {

// A finite mechanism: named message lists per agent and a total outcome
// table of valid lotteries, stored row-major over message profiles.
struct Mechanism {
  std::vector<std::vector<std::string>> messages;
  std::vector<Lottery> table;

  int agents() const { return static_cast<int>(messages.size()); }

  std::size_t profile_count() const {
    std::size_t n = 1;
    for (const auto& mi : messages) n *= mi.size();
    return n;
  }

  std::size_t flat_index(const std::vector<int>& profile) const {
    std::size_t idx = 0;
    for (int i = 0; i < agents(); ++i) {
      idx = idx * messages[i].size() + profile[i];
    }
    return idx;
  }

  const Lottery& outcome(const std::vector<int>& profile) const {
    return table[flat_index(profile)];
  }
};

}  // namespace implkit

#endif  // IMPLKIT_MECHANISM_HPP_
