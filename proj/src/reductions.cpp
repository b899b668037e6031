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
#include "qroute/reductions.hpp"

#include <algorithm>
#include <set>

namespace qroute::reductions {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw BudgetExceeded("reduction parameters overflow 64 bits");
  }
  return out;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw BudgetExceeded("reduction parameters overflow 64 bits");
  }
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string token_name(const SimpleGraph& h, std::size_t v, std::uint64_t i) {
  return "t_" + h.vertices[v] + "_" + std::to_string(i);
}

std::vector<std::size_t> check_arrangement(std::span<const std::size_t> arrangement,
                                           std::size_t n) {
  if (arrangement.size() != n) {
    throw InvalidInput("arrangement has " + std::to_string(arrangement.size()) +
                       " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<bool> used(n + 1, false);
  for (std::size_t slot : arrangement) {
    if (slot < 1 || slot > n || used[slot]) {
      throw InvalidInput("arrangement is not a bijection onto 1.." + std::to_string(n));
    }
    used[slot] = true;
  }
  return {arrangement.begin(), arrangement.end()};
}

}  // namespace

SimpleGraph make_simple_graph(std::vector<std::string> vertices,
                              std::vector<std::pair<std::size_t, std::size_t>> edges) {
  std::set<std::string> labels(vertices.begin(), vertices.end());
  if (labels.size() != vertices.size()) {
    throw InvalidInput("duplicate vertex label");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges) {
    if (u >= vertices.size() || v >= vertices.size()) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (u == v) {
      throw InvalidInput("self-loop on vertex " + vertices[u]);
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      throw InvalidInput("duplicate edge " + vertices[u] + "-" + vertices[v]);
    }
  }
  return SimpleGraph{std::move(vertices), std::move(edges)};
}

SimpleGraph parse_edge_list(std::string_view text,
                            std::span<const std::string> extra_vertices) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::set<std::string> labels(extra_vertices.begin(), extra_vertices.end());
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const std::string item = trim(text.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) continue;
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      throw InvalidInput("edge '" + item + "' is not of the form u-v");
    }
    std::string u = trim(item.substr(0, dash));
    std::string v = trim(item.substr(dash + 1));
    if (u.empty() || v.empty()) {
      throw InvalidInput("edge '" + item + "' is not of the form u-v");
    }
    labels.insert(u);
    labels.insert(v);
    raw.emplace_back(std::move(u), std::move(v));
  }
  std::vector<std::string> vertices(labels.begin(), labels.end());
  if (std::all_of(vertices.begin(), vertices.end(), is_integer)) {
    std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) {
      return std::stoll(a) < std::stoll(b);
    });
  }
  auto index_of = [&](const std::string& label) {
    return static_cast<std::size_t>(
        std::find(vertices.begin(), vertices.end(), label) - vertices.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
  return make_simple_graph(std::move(vertices), std::move(edges));
}

OlaParams ola_params(const SimpleGraph& h, std::uint64_t k) {
  OlaParams p;
  p.n = h.vertices.size();
  p.m = h.edges.size();
  p.k = k;
  if (p.m < 1) throw InvalidInput("linear arrangement reduction needs at least one edge");
  if (k < 1) throw InvalidInput("k must be positive");
  const std::uint64_t nm = mul(p.n, p.m);
  if (k >= nm) {
    throw InvalidInput("k = " + std::to_string(k) + " must be below nm = " +
                       std::to_string(nm) + " (every arrangement is a solution otherwise)");
  }
  p.alpha = add(mul(2, nm), 1);
  p.beta = mul(mul(p.n, p.n), p.alpha);
  p.gamma = mul(mul(4, k), p.alpha);
  p.block_pattern_length = mul(p.n, p.alpha - 1);
  p.round_length = add(mul(mul(p.m + 1, p.gamma), p.block_pattern_length), p.m);
  p.chain_length = mul(p.beta, p.round_length);
  return p;
}

TokenPlacement ola_layout(const SimpleGraph& h, const OlaParams& params,
                          std::span<const std::size_t> arrangement) {
  const auto slots = check_arrangement(arrangement, h.vertices.size());
  const std::size_t alpha = params.alpha;
  std::vector<Token> at(h.vertices.size() * alpha);
  for (std::size_t v = 0; v < slots.size(); ++v) {
    for (std::size_t i = 0; i < alpha; ++i) {
      at[(slots[v] - 1) * alpha + i] = static_cast<Token>(v * alpha + i);
    }
  }
  return TokenPlacement(std::move(at));
}

bool is_block_aligned(const TokenPlacement& placement, const OlaParams& params) {
  for (std::uint64_t v = 0; v < params.n; ++v) {
    for (std::uint64_t i = 0; i + 1 < params.alpha; ++i) {
      const Vertex a = placement.vertex_of(static_cast<Token>(v * params.alpha + i));
      const Vertex b = placement.vertex_of(static_cast<Token>(v * params.alpha + i + 1));
      if ((a > b ? a - b : b - a) != 1) return false;
    }
  }
  return true;
}

OlaInstance gen_ola(const SimpleGraph& h, std::uint64_t k, const OlaOptions& options) {
  const OlaParams params = ola_params(h, k);
  if (params.chain_length > options.max_chain_length) {
    throw BudgetExceeded("reduction chain has " + std::to_string(params.chain_length) +
                         " gates (beta " + std::to_string(params.beta) + " x round " +
                         std::to_string(params.round_length) + "), above the cap of " +
                         std::to_string(options.max_chain_length));
  }
  const std::size_t n = h.vertices.size();
  const std::size_t alpha = params.alpha;
  const std::size_t middle = static_cast<std::size_t>(params.n * params.m);  // 0-based
  Instance inst;
  inst.graph = Graph::path(n * alpha);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 1; i <= alpha; ++i) inst.tokens.push_back(token_name(h, v, i));
  }
  std::vector<ChainItem> block_pattern;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 1; i < alpha; ++i) {
      block_pattern.push_back(ChainItem::leaf(inst.gates.size()));
      inst.gates.push_back({"q_" + h.vertices[v] + "_" + std::to_string(i),
                            static_cast<Token>(v * alpha + i - 1),
                            static_cast<Token>(v * alpha + i)});
    }
  }
  std::vector<ChainItem> round;
  round.push_back(ChainItem::repeat(params.gamma, block_pattern));
  for (const auto& [u, v] : h.edges) {
    round.push_back(ChainItem::leaf(inst.gates.size()));
    inst.gates.push_back({"psi_" + h.vertices[u] + "_" + h.vertices[v],
                          static_cast<Token>(u * alpha + middle),
                          static_cast<Token>(v * alpha + middle)});
    round.push_back(ChainItem::repeat(params.gamma, block_pattern));
  }
  CompressedChain chain;
  chain.items.push_back(ChainItem::repeat(params.beta, std::move(round)));
  inst.order = std::move(chain);
  if (options.initial) {
    inst.initial = *options.initial;
  } else {
    inst.initial = TokenPlacement::identity(n * alpha);
  }
  validate(inst);
  return {std::move(inst), params};
}

OlaWitness ola_witness(const SimpleGraph& h, std::uint64_t k,
                       std::span<const std::size_t> arrangement,
                       std::optional<TokenPlacement> initial) {
  OlaOptions options;
  options.initial = std::move(initial);
  options.max_chain_length = static_cast<std::uint64_t>(-1);
  const OlaInstance ola = gen_ola(h, k, options);
  const OlaParams& p = ola.params;
  const TokenPlacement target = ola_layout(h, p, arrangement);

  OlaWitness witness;
  TokenPlacement f = ola.instance.initial;
  for (Vertex v = 0; v < target.size(); ++v) {
    for (Vertex at = f.vertex_of(target.token_at(v)); at > v; --at) {
      f.swap_vertices(at - 1, at);
      witness.swaps.push_back({at - 1, at});
    }
  }
  witness.prefix_length = witness.swaps.size();

  const std::size_t middle = static_cast<std::size_t>(p.n * p.m);
  std::vector<SwapSequence> excursions;
  for (const auto& [u, v] : h.edges) {
    const std::size_t pu = (arrangement[u] - 1) * p.alpha + middle;
    const std::size_t pv = (arrangement[v] - 1) * p.alpha + middle;
    const auto lo = static_cast<Vertex>(std::min(pu, pv));
    const auto hi = static_cast<Vertex>(std::max(pu, pv));
    SwapSequence out;
    for (Vertex at = lo; at + 1 < hi; ++at) out.push_back({at, at + 1});
    SwapSequence back(out.rbegin(), out.rend());
    out.insert(out.end(), back.begin(), back.end());
    witness.excursion_lengths.push_back(out.size());
    excursions.push_back(std::move(out));
  }
  for (std::uint64_t r = 0; r < p.beta; ++r) {
    for (const auto& e : excursions) {
      witness.swaps.insert(witness.swaps.end(), e.begin(), e.end());
    }
  }
  return witness;
}

Instance gen_vc(const SimpleGraph& h, std::optional<std::vector<std::string>> leaf_order) {
  const std::size_t n = h.vertices.size();
  Instance inst;
  inst.graph = Graph::star(n + 1);
  inst.tokens.push_back("0");
  for (const auto& label : h.vertices) {
    if (label == "0") {
      throw InvalidInput("vertex label '0' is reserved for the center token");
    }
    inst.tokens.push_back(label);
  }
  std::vector<Token> at(n + 1);
  at[0] = 0;
  if (leaf_order) {
    if (leaf_order->size() != n) {
      throw InvalidInput("leaf order must list every vertex exactly once");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto it = std::find(h.vertices.begin(), h.vertices.end(), (*leaf_order)[i]);
      if (it == h.vertices.end()) {
        throw InvalidInput("leaf order names unknown vertex '" + (*leaf_order)[i] + "'");
      }
      at[i + 1] = static_cast<Token>(it - h.vertices.begin() + 1);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) at[i + 1] = static_cast<Token>(i + 1);
  }
  inst.initial = TokenPlacement(std::move(at));
  for (const auto& [u, v] : h.edges) {
    inst.gates.push_back({"e_" + h.vertices[u] + "_" + h.vertices[v],
                          static_cast<Token>(u + 1), static_cast<Token>(v + 1)});
  }
  inst.order = Poset::antichain(inst.gates.size());
  validate(inst);
  return inst;
}

}  // namespace qroute::reductions
