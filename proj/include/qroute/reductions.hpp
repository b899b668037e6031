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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qroute/core.hpp"

// Hard-instance generators: linear arrangement -> path/chain routing, and
// vertex cover -> star/antichain routing.
namespace qroute::reductions {

/// Simple undirected graph with labeled vertices; edges index into vertices.
struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Throws InvalidInput on self-loops, duplicate edges, duplicate labels or
/// out-of-range endpoints.
SimpleGraph make_simple_graph(std::vector<std::string> vertices,
                              std::vector<std::pair<std::size_t, std::size_t>> edges);

/// Parses "1-2,2-3". Vertices are the union of `extra_vertices` and the edge
/// endpoints, sorted numerically when every label is an integer and
/// lexicographically otherwise.
SimpleGraph parse_edge_list(std::string_view text,
                            std::span<const std::string> extra_vertices = {});

struct OlaParams {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  std::uint64_t alpha = 0;  // 2nm + 1, block width
  std::uint64_t beta = 0;   // n^2 alpha, repetitions of the round
  std::uint64_t gamma = 0;  // 4k alpha, repetitions of the block pattern
  std::uint64_t block_pattern_length = 0;  // n (alpha - 1)
  std::uint64_t round_length = 0;          // (m + 1) gamma n (alpha - 1) + m
  std::uint64_t chain_length = 0;          // beta * round_length
};

struct OlaOptions {
  /// Defaults to the block-aligned layout for the identity arrangement.
  std::optional<TokenPlacement> initial;
  std::uint64_t max_chain_length = 1'000'000'000'000'000ULL;
};

struct OlaInstance {
  Instance instance;
  OlaParams params;
};

OlaParams ola_params(const SimpleGraph& h, std::uint64_t k);

/// Tokens are t_<v>_<i>: token index (j-1) alpha + (i-1) for the j-th vertex.
/// Gates q_<v>_<i> pair t_<v>_<i> with t_<v>_<i+1>; gate psi_<e> pairs the
/// middle tokens of edge e's endpoints. The chain is stored compressed.
OlaInstance gen_ola(const SimpleGraph& h, std::uint64_t k, const OlaOptions& options = {});

/// Block-aligned layout where vertex v's tokens occupy block arrangement[v]
/// (1-based) in order.
TokenPlacement ola_layout(const SimpleGraph& h, const OlaParams& params,
                          std::span<const std::size_t> arrangement);

/// True iff every vertex's tokens sit on consecutive vertices in order or in
/// reverse order.
bool is_block_aligned(const TokenPlacement& placement, const OlaParams& params);

struct OlaWitness {
  SwapSequence swaps;
  std::size_t prefix_length = 0;
  /// Length of each edge excursion, in edge order (one round).
  std::vector<std::size_t> excursion_lengths;
};

/// Sorting prefix into the layout of `arrangement`, then `beta` rounds of one
/// out-and-back excursion per edge. `initial` defaults to gen_ola's default.
OlaWitness ola_witness(const SimpleGraph& h, std::uint64_t k,
                       std::span<const std::size_t> arrangement,
                       std::optional<TokenPlacement> initial = std::nullopt);

/// Star with the center token "0" on vertex 0 and one leaf per vertex of H,
/// one gate e_<u>_<v> per edge, antichain order. `leaf_order` lists vertex
/// labels for leaves 1..n; defaults to vertex order.
Instance gen_vc(const SimpleGraph& h,
                std::optional<std::vector<std::string>> leaf_order = std::nullopt);

}  // namespace qroute::reductions
