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
#include <set>
#include <string>
#include <unordered_set>

#include "qroute/core.hpp"

namespace qroute {

const Poset& Instance::poset() const {
  if (const auto* p = std::get_if<Poset>(&order)) {
    return *p;
  }
  throw InvalidInput("instance uses a compressed chain; expand it first");
}

std::uint64_t Instance::gate_count() const {
  if (const auto* c = std::get_if<CompressedChain>(&order)) {
    return c->length();
  }
  return std::get<Poset>(order).size();
}

namespace {

void validate_items(const std::vector<ChainItem>& items, std::size_t gate_count) {
  for (const auto& item : items) {
    if (item.is_leaf()) {
      if (item.gate >= gate_count) {
        throw InvalidInput("compressed chain refers to unknown gate index " +
                           std::to_string(item.gate));
      }
    } else {
      validate_items(item.body, gate_count);
    }
  }
}

}  // namespace

void validate(const Instance& instance) {
  const std::size_t n = instance.graph.size();
  if (instance.tokens.size() != n) {
    throw InvalidInput("instance has " + std::to_string(instance.tokens.size()) +
                       " tokens but the graph has " + std::to_string(n) +
                       " vertices; pad with dummy tokens");
  }
  std::unordered_set<std::string> names;
  for (const auto& t : instance.tokens) {
    if (t.empty()) throw InvalidInput("empty token name");
    if (!names.insert(t).second) throw InvalidInput("duplicate token '" + t + "'");
  }
  if (instance.initial.size() != n) {
    throw InvalidInput("initial placement covers " +
                       std::to_string(instance.initial.size()) + " vertices, expected " +
                       std::to_string(n));
  }
  std::unordered_set<std::string> ids;
  for (const auto& g : instance.gates) {
    if (g.id.empty()) throw InvalidInput("empty gate id");
    if (!ids.insert(g.id).second) throw InvalidInput("duplicate gate id '" + g.id + "'");
    if (g.a >= n || g.b >= n) {
      throw InvalidInput("gate '" + g.id + "' refers to an unknown token");
    }
    if (g.a == g.b) {
      throw InvalidInput("gate '" + g.id + "' pairs token '" + instance.tokens[g.a] +
                         "' with itself");
    }
  }
  if (const auto* p = std::get_if<Poset>(&instance.order)) {
    if (p->size() != instance.gates.size()) {
      throw InvalidInput("precedence is over " + std::to_string(p->size()) +
                         " elements but there are " +
                         std::to_string(instance.gates.size()) + " gates");
    }
  } else {
    validate_items(std::get<CompressedChain>(instance.order).items,
                   instance.gates.size());
  }
}

Instance expand(const Instance& instance, std::uint64_t max_gates) {
  if (!instance.compressed()) {
    return instance;
  }
  const auto& chain = std::get<CompressedChain>(instance.order);
  const std::uint64_t total = chain.length();
  if (total > max_gates) {
    throw BudgetExceeded("expanding the compressed chain gives " +
                         std::to_string(total) + " gates (cap " +
                         std::to_string(max_gates) + ")");
  }
  Instance out;
  out.graph = instance.graph;
  out.tokens = instance.tokens;
  out.initial = instance.initial;
  ChainCursor cursor(chain);
  std::vector<std::size_t> order;
  std::uint64_t occurrence = 0;
  while (auto g = cursor.next()) {
    const Gate& tmpl = instance.gates[*g];
    out.gates.push_back({tmpl.id + "@" + std::to_string(occurrence++), tmpl.a, tmpl.b});
    order.push_back(order.size());
  }
  out.order = Poset::chain(order);
  return out;
}

bool has_disjoint_pairs(std::span<const Gate> gates) {
  std::set<Token> used;
  for (const auto& g : gates) {
    if (!used.insert(g.a).second || !used.insert(g.b).second) {
      return false;
    }
  }
  return true;
}

std::uint64_t trivial_length_bound(const Instance& instance) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(static_cast<std::uint64_t>(instance.graph.size()),
                             instance.gate_count(), &out)) {
    throw BudgetExceeded("length bound overflows 64 bits");
  }
  return out;
}

}  // namespace qroute
