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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qroute {

/// Vertex index, always 0-based internally. Serialized labels are offset by
/// Graph::label_base().
using Vertex = std::uint32_t;
/// Index into Instance::tokens.
using Token = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A swap was requested on a vertex pair that is not an edge.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class UnknownToken : public Error {
 public:
  using Error::Error;
};

/// Malformed input or a violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class CycleError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A configured search or size budget was exhausted. Distinct from
/// infeasibility, which solvers report with an empty optional.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);

enum class GraphKind { path, star, explicit_edges };

class Graph {
 public:
  Graph() = default;

  /// Vertices 0..n-1 with edges {i, i+1}.
  static Graph path(std::size_t n);
  /// Center 0, leaves 1..n-1.
  static Graph star(std::size_t n);
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  GraphKind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  /// Sorted, duplicate free.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  bool connected() const;

  /// Offset between internal indices and on-disk labels: 1 for paths and
  /// explicit graphs, 0 for stars (center labeled 0).
  Vertex label_base() const { return kind_ == GraphKind::star ? 0 : 1; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  GraphKind kind_ = GraphKind::explicit_edges;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Bijection vertices -> tokens, with the inverse kept in sync.
class TokenPlacement {
 public:
  TokenPlacement() = default;
  /// token_at[v] is the token on vertex v; must be a permutation of 0..n-1.
  explicit TokenPlacement(std::vector<Token> token_at);
  static TokenPlacement identity(std::size_t n);

  std::size_t size() const { return at_.size(); }
  Token token_at(Vertex v) const { return at_[v]; }
  Vertex vertex_of(Token t) const;
  std::span<const Token> tokens() const { return at_; }

  void swap_vertices(Vertex a, Vertex b);

  friend bool operator==(const TokenPlacement& a, const TokenPlacement& b) {
    return a.at_ == b.at_;
  }

 private:
  std::vector<Token> at_;
  std::vector<Vertex> where_;
};

TokenPlacement apply_swap(const TokenPlacement& placement, Edge edge,
                          const Graph& graph);

bool is_realized(const TokenPlacement& placement, Token a, Token b,
                 const Graph& graph);

struct Gate {
  std::string id;
  Token a = 0;
  Token b = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Partial order over gate indices, stored as a cover DAG. The order is the
/// transitive closure of the covers.
class Poset {
 public:
  Poset() = default;
  /// Throws CycleError if the covers contain a cycle.
  Poset(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> covers);

  static Poset antichain(std::size_t size);
  static Poset chain(std::span<const std::size_t> order);

  std::size_t size() const { return preds_.size(); }
  /// Sorted and duplicate free.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }
  std::span<const std::size_t> predecessors(std::size_t s) const {
    return preds_[s];
  }
  std::span<const std::size_t> successors(std::size_t s) const {
    return succs_[s];
  }

  /// True iff the order is total.
  bool is_chain() const;
  /// Smallest-index-first topological order.
  std::vector<std::size_t> topological_order() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.size() == b.size() && a.covers_ == b.covers_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
};

/// Visits each linear extension once. Return false from the visitor to stop.
void for_each_linear_extension(
    const Poset& poset,
    const std::function<bool(std::span<const std::size_t>)>& visit);
std::vector<std::vector<std::size_t>> linear_extensions(const Poset& poset);

/// Node of a compressed chain: either a single gate reference or a block
/// repeated `count` times.
struct ChainItem {
  std::size_t gate = 0;
  std::uint64_t count = 0;  // 0 marks a leaf
  std::vector<ChainItem> body;

  static ChainItem leaf(std::size_t gate);
  static ChainItem repeat(std::uint64_t count, std::vector<ChainItem> body);
  bool is_leaf() const { return count == 0; }

  friend bool operator==(const ChainItem&, const ChainItem&) = default;
};

/// A chain poset written as a program of repeated blocks over gate templates.
/// Each emitted occurrence is a distinct poset element.
struct CompressedChain {
  std::vector<ChainItem> items;

  /// Total number of occurrences; throws BudgetExceeded on overflow.
  std::uint64_t length() const;

  friend bool operator==(const CompressedChain&, const CompressedChain&) = default;
};

/// Streams the gate indices of a compressed chain in order, O(depth) memory.
class ChainCursor {
 public:
  explicit ChainCursor(const CompressedChain& chain);
  std::optional<std::size_t> next();

 private:
  struct Frame {
    const std::vector<ChainItem>* items;
    std::size_t index;
    std::uint64_t remaining;
  };
  std::vector<Frame> stack_;
};

using Precedence = std::variant<Poset, CompressedChain>;

struct Instance {
  Graph graph;
  std::vector<std::string> tokens;
  std::vector<Gate> gates;
  Precedence order;
  TokenPlacement initial;

  bool compressed() const {
    return std::holds_alternative<CompressedChain>(order);
  }
  /// Throws InvalidInput for compressed instances.
  const Poset& poset() const;
  /// |S|: gate count, or occurrence count for compressed chains.
  std::uint64_t gate_count() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Checks every Instance invariant, throwing InvalidInput on violation.
void validate(const Instance& instance);

/// Materializes a compressed chain into an explicit chain poset whose gates
/// are named "<template id>@<occurrence>". Plain instances are returned as is.
Instance expand(const Instance& instance, std::uint64_t max_gates = 1'000'000);

bool has_disjoint_pairs(std::span<const Gate> gates);

/// |V| * |S|.
std::uint64_t trivial_length_bound(const Instance& instance);

using SwapSequence = std::vector<Edge>;

/// step[s] is the placement index at which gate (or occurrence) s is realized.
struct Schedule {
  std::vector<std::size_t> step;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct Solution {
  SwapSequence swaps;
  Schedule schedule;
};

/// Throws InvalidEdge on the first swap that is not a graph edge.
void check_swaps(const Graph& graph, const SwapSequence& swaps);

/// Greedy earliest-realization schedule, or nullopt if the sequence is not
/// feasible. Compressed chains are expanded into a per-occurrence schedule.
std::optional<Schedule> verify(const Instance& instance,
                               const SwapSequence& swaps);

using RealizationVisitor =
    std::function<void(std::uint64_t occurrence, std::size_t gate, std::size_t step)>;

/// Same decision as verify. For compressed chains runs in memory independent
/// of the chain length; the visitor sees each realization as it happens.
bool verify_streaming(const Instance& instance, const SwapSequence& swaps,
                      const RealizationVisitor& visit = {});

}  // namespace qroute
