// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <optional>

#include "qroute/core.hpp"

namespace qroute {

struct ExactOptions {
  /// Maximum number of distinct search states before BudgetExceeded.
  std::size_t state_budget = 10'000'000;
};

/// Minimum-length feasible sequence by breadth-first search over
/// (placement, realized downset) states, where each state is closed under
/// greedy realization. nullopt iff no feasible sequence exists.
std::optional<Solution> solve_exact(const Instance& instance,
                                    const ExactOptions& options = {});

}  // namespace qroute
