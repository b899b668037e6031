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


#include "support/brute.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

namespace qroute::testing {

bool brute_feasible(const Instance& instance, const SwapSequence& swaps) {
  const Poset& poset = instance.poset();
  const std::size_t count = poset.size();
  const std::size_t steps = swaps.size() + 1;
  std::vector<std::vector<bool>> realized(steps, std::vector<bool>(count));
  TokenPlacement f = instance.initial;
  for (std::size_t t = 0; t < steps; ++t) {
    if (t > 0) f = apply_swap(f, swaps[t - 1], instance.graph);
    for (std::size_t s = 0; s < count; ++s) {
      const Gate& g = instance.gates[s];
      realized[t][s] = instance.graph.adjacent(f.vertex_of(g.a), f.vertex_of(g.b));
    }
  }
  std::vector<std::size_t> map(count, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t s = 0; s < count && ok; ++s) ok = realized[map[s]][s];
    for (const auto& [a, b] : poset.covers()) {
      if (!ok) break;
      ok = map[a] <= map[b];
    }
    if (ok) return true;
    std::size_t digit = 0;
    while (digit < count && ++map[digit] == steps) map[digit++] = 0;
    if (digit == count) return false;
  }
}

namespace {

bool deepen(const Instance& instance, SwapSequence& prefix, std::size_t length) {
  if (prefix.size() == length) {
    return verify(instance, prefix).has_value();
  }
  for (const Edge& e : instance.graph.edges()) {
    prefix.push_back(e);
    if (deepen(instance, prefix, length)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::size_t> iterative_deepening(const Instance& instance,
                                               std::size_t max_length) {
  for (std::size_t length = 0; length <= max_length; ++length) {
    SwapSequence prefix;
    if (deepen(instance, prefix, length)) return length;
  }
  return std::nullopt;
}

std::optional<std::size_t> noncanonical_bfs(const Instance& instance) {
  const Poset& poset = instance.poset();
  const std::size_t count = poset.size();
  if (count > 63) throw InvalidInput("noncanonical_bfs supports at most 63 gates");
  const std::uint64_t full = (std::uint64_t{1} << count) - 1;
  using State = std::pair<std::vector<Token>, std::uint64_t>;
  std::map<State, std::size_t> dist;
  std::deque<State> queue;
  State start{{instance.initial.tokens().begin(), instance.initial.tokens().end()}, 0};
  dist[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    State state = queue.front();
    queue.pop_front();
    const std::size_t d = dist[state];
    if (state.second == full) return d;
    const TokenPlacement f(state.first);
    auto relax = [&](State next, std::size_t nd, bool front) {
      auto it = dist.find(next);
      if (it != dist.end() && it->second <= nd) return;
      dist[next] = nd;
      if (front) {
        queue.push_front(std::move(next));
      } else {
        queue.push_back(std::move(next));
      }
    };
    for (std::size_t s = 0; s < count; ++s) {
      if ((state.second >> s) & 1u) continue;
      bool ready = true;
      for (std::size_t p : poset.predecessors(s)) ready = ready && ((state.second >> p) & 1u);
      const Gate& g = instance.gates[s];
      if (ready && instance.graph.adjacent(f.vertex_of(g.a), f.vertex_of(g.b))) {
        relax({state.first, state.second | (std::uint64_t{1} << s)}, d, true);
      }
    }
    for (const Edge& e : instance.graph.edges()) {
      State next = state;
      std::swap(next.first[e.u], next.first[e.v]);
      relax(std::move(next), d + 1, false);
    }
  }
  return std::nullopt;
}

long restricted_distance(std::size_t n, const std::vector<std::size_t>& from,
                         const std::vector<std::size_t>& to) {
  std::map<std::vector<std::size_t>, long> dist;
  std::deque<std::vector<std::size_t>> queue;
  dist[from] = 0;
  queue.push_back(from);
  while (!queue.empty()) {
    auto state = queue.front();
    queue.pop_front();
    const long d = dist[state];
    if (state == to) return d;
    const std::set<std::size_t> occupied(state.begin(), state.end());
    for (std::size_t i = 0; i < state.size(); ++i) {
      for (int dir : {-1, +1}) {
        if (dir < 0 && state[i] == 0) continue;
        const std::size_t p = state[i] + static_cast<std::size_t>(dir);
        if (p >= n || occupied.contains(p)) continue;
        auto next = state;
        next[i] = p;
        if (dist.emplace(next, d + 1).second) queue.push_back(next);
      }
    }
  }
  return -1;
}

std::size_t brute_min_vertex_cover(const reductions::SimpleGraph& h) {
  const std::size_t n = h.vertices.size();
  std::size_t best = n;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    bool covers = true;
    for (const auto& [u, v] : h.edges) {
      covers = covers && (((subset >> u) & 1u) || ((subset >> v) & 1u));
    }
    if (covers) {
      best = std::min(best, static_cast<std::size_t>(__builtin_popcountll(subset)));
    }
  }
  return best;
}

std::size_t brute_linear_extension_count(const Poset& poset) {
  std::vector<std::size_t> perm(poset.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::size_t count = 0;
  do {
    std::vector<std::size_t> position(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) position[perm[i]] = i;
    bool ok = true;
    for (const auto& [a, b] : poset.covers()) ok = ok && position[a] < position[b];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace qroute::testing
