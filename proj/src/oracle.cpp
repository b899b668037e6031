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
#include "qroute/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace qroute {

namespace {

class StateCodec {
 public:
  StateCodec(std::size_t vertices, std::size_t gates)
      : vertices_(vertices), words_((gates + 63) / 64), wide_(vertices > 255) {
    if (vertices > 65535) {
      throw InvalidInput("exact solver supports at most 65535 vertices");
    }
  }

  std::size_t words() const { return words_; }

  std::string encode(const TokenPlacement& f, const std::vector<std::uint64_t>& mask) const {
    std::string key;
    key.reserve(vertices_ * (wide_ ? 2 : 1) + words_ * 8);
    for (Token t : f.tokens()) {
      key.push_back(static_cast<char>(t & 0xff));
      if (wide_) key.push_back(static_cast<char>(t >> 8));
    }
    for (std::uint64_t w : mask) {
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
    }
    return key;
  }

  void decode(const std::string& key, TokenPlacement& f, std::vector<std::uint64_t>& mask) const {
    std::vector<Token> at(vertices_);
    std::size_t pos = 0;
    for (std::size_t v = 0; v < vertices_; ++v) {
      Token t = static_cast<unsigned char>(key[pos++]);
      if (wide_) t |= static_cast<Token>(static_cast<unsigned char>(key[pos++])) << 8;
      at[v] = t;
    }
    f = TokenPlacement(std::move(at));
    mask.assign(words_, 0);
    for (std::size_t w = 0; w < words_; ++w) {
      for (int b = 0; b < 8; ++b) {
        mask[w] |= static_cast<std::uint64_t>(static_cast<unsigned char>(key[pos++])) << (8 * b);
      }
    }
  }

 private:
  std::size_t vertices_;
  std::size_t words_;
  bool wide_;
};

bool test_bit(const std::vector<std::uint64_t>& mask, std::size_t i) {
  return (mask[i / 64] >> (i % 64)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& mask, std::size_t i) {
  mask[i / 64] |= std::uint64_t{1} << (i % 64);
}

// Realize every available gate whose pair is adjacent, to a fixpoint.
// Returns the number of newly realized gates.
std::size_t close_under_realization(const Instance& instance, const TokenPlacement& f,
                                    std::vector<std::uint64_t>& mask) {
  const Poset& poset = instance.poset();
  std::size_t added = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < poset.size(); ++s) {
      if (test_bit(mask, s)) continue;
      const auto preds = poset.predecessors(s);
      if (!std::all_of(preds.begin(), preds.end(),
                       [&](std::size_t p) { return test_bit(mask, p); })) {
        continue;
      }
      const Gate& g = instance.gates[s];
      if (instance.graph.adjacent(f.vertex_of(g.a), f.vertex_of(g.b))) {
        set_bit(mask, s);
        ++added;
        changed = true;
      }
    }
  }
  return added;
}

struct Node {
  const std::string* parent;
  std::size_t edge;
};

}  // namespace

std::optional<Solution> solve_exact(const Instance& instance,
                                    const ExactOptions& options) {
  validate(instance);
  const Poset& poset = instance.poset();
  const std::size_t gate_total = poset.size();
  const auto& edges = instance.graph.edges();
  StateCodec codec(instance.graph.size(), gate_total);

  std::unordered_map<std::string, Node> seen;
  std::deque<const std::string*> queue;

  std::vector<std::uint64_t> mask(codec.words(), 0);
  std::size_t realized = close_under_realization(instance, instance.initial, mask);
  auto [root, inserted] = seen.emplace(codec.encode(instance.initial, mask), Node{nullptr, 0});
  (void)inserted;

  const std::string* goal = nullptr;
  if (realized == gate_total) {
    goal = &root->first;
  } else {
    queue.push_back(&root->first);
  }

  TokenPlacement f;
  std::vector<std::uint64_t> base_mask;
  while (!goal && !queue.empty()) {
    const std::string* key = queue.front();
    queue.pop_front();
    codec.decode(*key, f, base_mask);
    std::size_t base_count = 0;
    for (std::uint64_t w : base_mask) base_count += static_cast<std::size_t>(__builtin_popcountll(w));

    for (std::size_t e = 0; e < edges.size(); ++e) {
      f.swap_vertices(edges[e].u, edges[e].v);
      mask = base_mask;
      const std::size_t count = base_count + close_under_realization(instance, f, mask);
      auto [it, fresh] = seen.emplace(codec.encode(f, mask), Node{key, e});
      f.swap_vertices(edges[e].u, edges[e].v);
      if (!fresh) continue;
      if (seen.size() > options.state_budget) {
        throw BudgetExceeded("exact search exceeded its budget of " +
                             std::to_string(options.state_budget) + " states");
      }
      if (count == gate_total) {
        goal = &it->first;
        break;
      }
      queue.push_back(&it->first);
    }
  }
  if (!goal) {
    return std::nullopt;
  }

  Solution solution;
  for (const std::string* at = goal; seen.at(*at).parent != nullptr; at = seen.at(*at).parent) {
    solution.swaps.push_back(edges[seen.at(*at).edge]);
  }
  std::reverse(solution.swaps.begin(), solution.swaps.end());
  auto schedule = verify(instance, solution.swaps);
  if (!schedule) {
    throw std::logic_error("exact search produced an infeasible sequence");
  }
  solution.schedule = std::move(*schedule);
  return solution;
}

}  // namespace qroute
