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
#include <span>
#include <string>

#include "qroute/core.hpp"

namespace qroute {

/// Potential of a placement for token-disjoint gates on a path.
/// value = gap - cross, and equals the optimal routing length.
struct PotentialReport {
  long gap = 0;
  long cross = 0;
  long value = 0;

  friend bool operator==(const PotentialReport&, const PotentialReport&) = default;
};

/// Number of vertices strictly between the two tokens.
std::size_t gap_of(const TokenPlacement& placement, Token a, Token b);

/// Number of unordered gate pairs whose intervals interleave. Nested and
/// separate intervals do not count.
std::size_t cross_count(const TokenPlacement& placement, std::span<const Gate> gates);

PotentialReport value_of(const TokenPlacement& placement, std::span<const Gate> gates);

/// Throws InvalidInput naming the first token shared by two gates. When
/// token names are given they are used in the message.
void require_disjoint_pairs(std::span<const Gate> gates,
                            std::span<const std::string> token_names = {});

/// Optimal sequence for a path instance with token-disjoint gates. The final
/// placement realizes every gate at once, so the result is feasible for any
/// precedence relation.
Solution solve_disjoint(const Instance& instance);

}  // namespace qroute
