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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qroute/core.hpp"

// Exact routing on paths, parameterized by the number of gates.
//
// Only the tokens that occur in some gate ("special" tokens) matter. A
// placement is compressed to its signature: the left-to-right order of the
// special tokens and the gap vector
//
//   gaps[0] = p_1,  gaps[i] = p_{i+1} - p_i   (p_i = 1-based position of the
//                                              i-th special token from the left)
//
// The vertices after the last special token form an implicit trailing gap.
// A chain of gates is then routed by a shortest-path search over
// (signature, next gate) states, where from each state only the two extreme
// ways of making a pair of neighbouring special tokens adjacent are explored:
// pull the right token left, or push the left token right.
namespace qroute::fpt {

struct Signature {
  std::vector<int> gaps;
  std::vector<Token> order;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Union of the gate pairs, in order of first appearance.
std::vector<Token> special_tokens(std::span<const Gate> gates);

Signature signature_of(const TokenPlacement& placement, std::span<const Token> specials);

/// Places the special tokens at the prefix sums of sig.gaps in sig.order and
/// the filler tokens in the remaining vertices from left to right.
TokenPlacement placement_from_signature(const Signature& sig,
                                        std::span<const Token> filler, std::size_t n);

/// Minimum swaps between two placements with the same special-token order:
/// sum of |prefix(x)_i - prefix(y)_i|.
long sig_distance(std::span<const int> x, std::span<const int> y);

/// Moves the special tokens of `placement` (whose left-to-right order must be
/// `order`) to the prefix sums of `target`, one filler exchange at a time and
/// never exchanging two special tokens. Left moves go first in increasing
/// order, then right moves in decreasing order. Returns the swaps applied.
SwapSequence shift_within_order(TokenPlacement& placement, std::span<const Token> order,
                                std::span<const int> target);

/// The extreme points of making gaps[j] equal to 1, 1 <= j < gaps.size().
/// keep_left: the token at order[j-1] stays and order[j] moves left.
/// Otherwise order[j-1] moves right. Displaced filler spills into the
/// neighbouring gap (the trailing gap when j is last).
std::vector<int> collapse_gap(std::span<const int> gaps, std::size_t j, bool keep_left);

struct SigState {
  Signature sig;
  /// Index of the first unrealized chain element; chain size means done.
  std::size_t next = 0;

  friend bool operator==(const SigState&, const SigState&) = default;
};

enum class MoveKind { reorder, realize };

struct SigMove {
  SigState to;
  long cost = 0;
  MoveKind kind = MoveKind::reorder;
  /// Gap index collapsed by the move (1-based neighbour index).
  std::size_t j = 0;
};

/// Outgoing moves of a search state. Reorder moves collapse gap j and swap
/// the two special tokens around it (cost gaps[j]); realize moves collapse
/// the gap between the next gate's tokens when they are neighbours in the
/// order (cost gaps[j] - 1).
std::vector<SigMove> neighbors(const SigState& state,
                               std::span<const std::pair<Token, Token>> chain);

/// ((2k)! + 1) * k. Throws BudgetExceeded when not representable.
std::uint64_t l_max(std::uint64_t k);

struct FptOptions {
  std::size_t state_budget = 10'000'000;
};

/// Optimal sequence realizing the gates in `order` (a sequence of gate
/// indices) one after another. Returns nullopt if the optimum is not below
/// `bound`. The schedule is checked against the instance's own poset.
std::optional<Solution> solve_chain(const Instance& instance,
                                    std::span<const std::size_t> order,
                                    const FptOptions& options = {},
                                    std::optional<long> bound = std::nullopt);

/// solve_chain for an instance whose poset is a chain.
Solution solve_chain(const Instance& instance, const FptOptions& options = {});

/// Minimum of solve_chain over all linear extensions (first one wins ties).
Solution solve_fpt(const Instance& instance, const FptOptions& options = {});

}  // namespace qroute::fpt
