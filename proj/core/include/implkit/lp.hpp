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

#ifndef IMPLKIT_LP_HPP_
#define IMPLKIT_LP_HPP_

#include <vector>

#include "implkit/rational.hpp"

namespace implkit {

// Decides, exactly, whether some probability vector lambda over n points
// satisfies A lambda >= 0 (A given row-wise).  Phase-1 simplex with Bland's
// rule, so termination is guaranteed and the verdict is usable as an oracle.
bool lp_feasible(const std::vector<std::vector<Rational>>& A, int n);

}  // namespace implkit

#endif  // IMPLKIT_LP_HPP_
