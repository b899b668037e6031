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
#include "qroute/fpt.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

namespace qroute::fpt {

std::vector<Token> special_tokens(std::span<const Gate> gates) {
  std::vector<Token> out;
  std::set<Token> seen;
  for (const auto& g : gates) {
    for (Token t : {g.a, g.b}) {
      if (seen.insert(t).second) out.push_back(t);
    }
  }
  return out;
}

Signature signature_of(const TokenPlacement& placement, std::span<const Token> specials) {
  if (specials.empty()) {
    throw InvalidInput("signature needs at least one special token");
  }
  std::vector<bool> is_special(placement.size(), false);
  for (Token t : specials) {
    if (t >= placement.size()) {
      throw UnknownToken("unknown token " + std::to_string(t));
    }
    if (is_special[t]) {
      throw InvalidInput("special token " + std::to_string(t) + " listed twice");
    }
    is_special[t] = true;
  }
  Signature sig;
  int previous = 0;
  for (std::size_t v = 0; v < placement.size(); ++v) {
    const Token t = placement.token_at(static_cast<Vertex>(v));
    if (!is_special[t]) continue;
    const int position = static_cast<int>(v) + 1;
    sig.gaps.push_back(position - previous);
    sig.order.push_back(t);
    previous = position;
  }
  return sig;
}

TokenPlacement placement_from_signature(const Signature& sig,
                                        std::span<const Token> filler, std::size_t n) {
  const std::size_t specials = sig.gaps.size();
  if (sig.order.size() != specials) {
    throw InvalidInput("signature order and gap vector differ in length");
  }
  if (specials > n || filler.size() != n - specials) {
    throw InvalidInput("filler has " + std::to_string(filler.size()) +
                       " tokens, expected " + std::to_string(n - std::min(n, specials)));
  }
  constexpr Token unset = static_cast<Token>(-1);
  std::vector<Token> at(n, unset);
  std::size_t position = 0;
  for (std::size_t i = 0; i < specials; ++i) {
    if (sig.gaps[i] < 1) throw InvalidInput("signature gaps must be at least 1");
    position += static_cast<std::size_t>(sig.gaps[i]);
    if (position > n) throw InvalidInput("signature does not fit on the path");
    at[position - 1] = sig.order[i];
  }
  std::size_t next = 0;
  for (auto& slot : at) {
    if (slot == unset) slot = filler[next++];
  }
  return TokenPlacement(std::move(at));
}

long sig_distance(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) {
    throw InvalidInput("signature dimensions differ (" + std::to_string(x.size()) +
                       " vs " + std::to_string(y.size()) + ")");
  }
  long v = 0;
  long w = 0;
  long total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    v += x[i];
    w += y[i];
    total += v > w ? v - w : w - v;
  }
  return total;
}

SwapSequence shift_within_order(TokenPlacement& placement, std::span<const Token> order,
                                std::span<const int> target) {
  if (order.size() != target.size()) {
    throw InvalidInput("target gap vector has the wrong dimension");
  }
  const std::size_t count = order.size();
  std::vector<Vertex> from(count);
  std::vector<Vertex> to(count);
  long position = 0;
  for (std::size_t i = 0; i < count; ++i) {
    from[i] = placement.vertex_of(order[i]);
    if (i > 0 && from[i] <= from[i - 1]) {
      throw InvalidInput("placement does not have the given special-token order");
    }
    if (target[i] < 1) throw InvalidInput("target gaps must be at least 1");
    position += target[i];
    if (position > static_cast<long>(placement.size())) {
      throw InvalidInput("target signature does not fit on the path");
    }
    to[i] = static_cast<Vertex>(position - 1);
  }
  std::vector<bool> is_special(placement.size(), false);
  for (Token t : order) is_special[t] = true;

  SwapSequence swaps;
  auto step = [&](Vertex a, Vertex b) {
    if (is_special[placement.token_at(a)] && is_special[placement.token_at(b)]) {
      throw std::logic_error("shift would exchange two special tokens");
    }
    placement.swap_vertices(a, b);
    swaps.push_back({a, b});
  };
  for (std::size_t i = 0; i < count; ++i) {
    for (Vertex p = from[i]; p > to[i]; --p) step(p - 1, p);
  }
  for (std::size_t i = count; i-- > 0;) {
    for (Vertex p = from[i]; p < to[i]; ++p) step(p, p + 1);
  }
  return swaps;
}

std::vector<int> collapse_gap(std::span<const int> gaps, std::size_t j, bool keep_left) {
  if (j == 0 || j >= gaps.size()) {
    throw InvalidInput("gap index " + std::to_string(j) + " out of range");
  }
  std::vector<int> y(gaps.begin(), gaps.end());
  const int spill = gaps[j] - 1;
  y[j] = 1;
  if (keep_left) {
    if (j + 1 < y.size()) y[j + 1] += spill;
  } else {
    y[j - 1] += spill;
  }
  return y;
}

std::vector<SigMove> neighbors(const SigState& state,
                               std::span<const std::pair<Token, Token>> chain) {
  const auto& gaps = state.sig.gaps;
  const auto& order = state.sig.order;
  std::vector<SigMove> moves;
  for (std::size_t j = 1; j < gaps.size(); ++j) {
    std::vector<Token> swapped = order;
    std::swap(swapped[j - 1], swapped[j]);
    for (bool keep_left : {true, false}) {
      if (!keep_left && gaps[j] == 1) break;
      moves.push_back({SigState{{collapse_gap(gaps, j, keep_left), swapped}, state.next},
                       static_cast<long>(gaps[j]), MoveKind::reorder, j});
    }
  }
  if (state.next < chain.size()) {
    const auto [a, b] = chain[state.next];
    const auto pa = std::find(order.begin(), order.end(), a) - order.begin();
    const auto pb = std::find(order.begin(), order.end(), b) - order.begin();
    if (pa - pb == 1 || pb - pa == 1) {
      const auto j = static_cast<std::size_t>(std::max(pa, pb));
      for (bool keep_left : {true, false}) {
        if (!keep_left && gaps[j] == 1) break;
        moves.push_back({SigState{{collapse_gap(gaps, j, keep_left), order}, state.next + 1},
                         static_cast<long>(gaps[j] - 1), MoveKind::realize, j});
      }
    }
  }
  return moves;
}

std::uint64_t l_max(std::uint64_t k) {
  std::uint64_t factorial = 1;
  for (std::uint64_t i = 2; i <= 2 * k; ++i) {
    if (__builtin_mul_overflow(factorial, i, &factorial)) {
      throw BudgetExceeded("l_max(" + std::to_string(k) + ") overflows 64 bits");
    }
  }
  std::uint64_t out = 0;
  if (__builtin_add_overflow(factorial, std::uint64_t{1}, &out) ||
      __builtin_mul_overflow(out, k, &out)) {
    throw BudgetExceeded("l_max(" + std::to_string(k) + ") overflows 64 bits");
  }
  return out;
}

namespace {

std::string state_key(const SigState& s) {
  std::string key;
  key.reserve(s.sig.gaps.size() * 8 + 8);
  auto put = [&](std::uint32_t value) {
    key.append(reinterpret_cast<const char*>(&value), sizeof value);
  };
  for (int g : s.sig.gaps) put(static_cast<std::uint32_t>(g));
  for (Token t : s.sig.order) put(t);
  put(static_cast<std::uint32_t>(s.next));
  return key;
}

// Gap sizes reachable from the initial signature: 1 plus the total size of a
// run of consecutive initial filler blocks.
class BlockClosure {
 public:
  explicit BlockClosure(std::span<const int> initial_gaps) {
    allowed_.insert(1);
    for (std::size_t i = 0; i < initial_gaps.size(); ++i) {
      int sum = 1;
      for (std::size_t j = i; j < initial_gaps.size(); ++j) {
        sum += initial_gaps[j] - 1;
        allowed_.insert(sum);
      }
    }
  }

  void check(const Signature& sig) const {
    for (int g : sig.gaps) {
      if (!allowed_.contains(g)) {
        throw std::logic_error("signature gap " + std::to_string(g) +
                               " is not a union of consecutive initial blocks");
      }
    }
  }

 private:
  std::set<int> allowed_;
};

struct Record {
  SigState state;
  long dist;
  std::size_t parent;
  MoveKind kind;
  std::size_t j;
  bool settled;
};

constexpr std::size_t no_parent = static_cast<std::size_t>(-1);

void require_path(const Instance& instance) {
  if (instance.graph.kind() != GraphKind::path) {
    throw InvalidInput("the parameterized algorithm requires a path graph");
  }
  if (instance.compressed()) {
    throw InvalidInput("the parameterized algorithm needs an explicit poset");
  }
}

}  // namespace

std::optional<Solution> solve_chain(const Instance& instance,
                                    std::span<const std::size_t> order,
                                    const FptOptions& options, std::optional<long> bound) {
  validate(instance);
  require_path(instance);
  if (order.empty()) {
    if (bound && *bound <= 0) return std::nullopt;
    auto schedule = verify(instance, {});
    if (!schedule) throw std::logic_error("empty chain is infeasible");
    return Solution{{}, std::move(*schedule)};
  }

  std::vector<Gate> chain_gates;
  std::vector<std::pair<Token, Token>> chain;
  for (std::size_t s : order) {
    chain_gates.push_back(instance.gates.at(s));
    chain.emplace_back(chain_gates.back().a, chain_gates.back().b);
  }
  const std::vector<Token> specials = special_tokens(chain_gates);

  std::vector<Record> records;
  std::unordered_map<std::string, std::size_t> index;
  using Entry = std::pair<long, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  SigState start{signature_of(instance.initial, specials), 0};
  const BlockClosure closure(start.sig.gaps);
  index.emplace(state_key(start), 0);
  records.push_back({std::move(start), 0, no_parent, MoveKind::realize, 0, false});
  frontier.emplace(0, 0);

  std::optional<std::size_t> goal;
  while (!frontier.empty()) {
    const auto [dist, id] = frontier.top();
    frontier.pop();
    if (records[id].settled || dist > records[id].dist) continue;
    records[id].settled = true;
    if (bound && dist >= *bound) return std::nullopt;
    if (records[id].state.next == chain.size()) {
      goal = id;
      break;
    }
    const SigState current = records[id].state;
    for (auto& move : neighbors(current, chain)) {
      closure.check(move.to.sig);
      const long next_dist = dist + move.cost;
      auto [it, fresh] = index.emplace(state_key(move.to), records.size());
      if (fresh) {
        records.push_back({std::move(move.to), next_dist, id, move.kind, move.j, false});
        if (records.size() > options.state_budget) {
          throw BudgetExceeded("signature search exceeded its budget of " +
                               std::to_string(options.state_budget) + " states");
        }
        frontier.emplace(next_dist, it->second);
      } else if (next_dist < records[it->second].dist) {
        Record& r = records[it->second];
        r.dist = next_dist;
        r.parent = id;
        r.kind = move.kind;
        r.j = move.j;
        frontier.emplace(next_dist, it->second);
      }
    }
  }
  if (!goal) return std::nullopt;

  std::vector<std::size_t> path;
  for (std::size_t at = *goal; at != no_parent; at = records[at].parent) path.push_back(at);
  std::reverse(path.begin(), path.end());

  Solution solution;
  TokenPlacement f = instance.initial;
  for (std::size_t step = 1; step < path.size(); ++step) {
    const Record& from = records[path[step - 1]];
    const Record& to = records[path[step]];
    const auto& target = to.state.sig.gaps;
    const long expected = sig_distance(from.state.sig.gaps, target);
    SwapSequence shift = shift_within_order(f, from.state.sig.order, target);
    if (static_cast<long>(shift.size()) != expected) {
      throw std::logic_error("token shift length differs from the signature distance");
    }
    solution.swaps.insert(solution.swaps.end(), shift.begin(), shift.end());
    if (to.kind == MoveKind::reorder) {
      long left = 0;
      for (std::size_t i = 0; i < to.j; ++i) left += target[i];
      const Vertex a = static_cast<Vertex>(left - 1);
      if (f.token_at(a) != from.state.sig.order[to.j - 1] ||
          f.token_at(a + 1) != from.state.sig.order[to.j]) {
        throw std::logic_error("reorder swap is not between the expected tokens");
      }
      f.swap_vertices(a, a + 1);
      solution.swaps.push_back({a, a + 1});
    }
  }
  if (static_cast<long>(solution.swaps.size()) != records[*goal].dist) {
    throw std::logic_error("reconstructed sequence length differs from the optimum");
  }
  auto schedule = verify(instance, solution.swaps);
  if (!schedule) {
    throw std::logic_error("reconstructed sequence is infeasible");
  }
  solution.schedule = std::move(*schedule);
  return solution;
}

Solution solve_chain(const Instance& instance, const FptOptions& options) {
  validate(instance);
  require_path(instance);
  const Poset& poset = instance.poset();
  if (!poset.is_chain()) {
    throw InvalidInput("solve_chain requires a chain poset");
  }
  const auto order = poset.topological_order();
  auto solution = solve_chain(instance, order, options);
  if (!solution) throw std::logic_error("chain search found no solution");
  return std::move(*solution);
}

Solution solve_fpt(const Instance& instance, const FptOptions& options) {
  validate(instance);
  require_path(instance);
  std::optional<Solution> best;
  for_each_linear_extension(instance.poset(), [&](std::span<const std::size_t> order) {
    std::optional<long> bound;
    if (best) bound = static_cast<long>(best->swaps.size());
    if (auto candidate = solve_chain(instance, order, options, bound)) {
      best = std::move(candidate);
    }
    return !(best && best->swaps.empty());
  });
  if (!best) throw std::logic_error("no linear extension produced a solution");
  return std::move(*best);
}

}  // namespace qroute::fpt
