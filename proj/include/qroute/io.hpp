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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qroute/core.hpp"

// On-disk JSON formats.
//
// Instance:
//   {
//     "graph": {"type": "path" | "star" | "edges", "n": N, "edges": [[u, v], ...]},
//     "tokens": ["a", "b", ...],
//     "initial": ["b", "a", ...],          // token on each vertex, in label order
//     "gates": [{"id": "g1", "pair": ["a", "b"]}, ...],
//     "precedence": [["g1", "g2"], ...]    // or "chain": ["g1", "g2", ...]
//                                          // or "repeat": [{"count": c, "block": [...]}]
//   }
// Vertex labels are 1-based for paths and edge lists and 0-based for stars
// (center 0). Block entries of "repeat" are gate ids or nested
// {"count", "block"} objects. With none of the three keys the gates form an
// antichain.
//
// Solution:
//   {"length": L, "swaps": [[u, v], ...], "schedule": {"g1": 0, ...},
//    "algorithm": "fpt", "elapsed_ms": 1.5}
namespace qroute::io {

using PathElement = std::variant<std::string, std::size_t>;

/// 1-based line of the value at `path` in a well-formed JSON document.
std::optional<std::size_t> locate_line(std::string_view text,
                                       std::span<const PathElement> path);

/// Throws InvalidInput with a "line N:" prefix when the error can be located.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

struct SolutionFile {
  SwapSequence swaps;
  std::vector<std::pair<std::string, std::size_t>> schedule;
  std::string algorithm;
  double elapsed_ms = 0;
};

/// Gate names used in schedules: gate ids, or "<id>@<occurrence>" for
/// compressed chains.
std::string schedule_name(const Instance& instance, std::size_t gate,
                          std::uint64_t occurrence);

std::string serialize_solution(const Instance& instance, const Solution& solution,
                               std::string_view algorithm, double elapsed_ms);

/// Vertex labels are converted with the graph's label base. Throws
/// InvalidEdge for a swap that is not an edge and InvalidInput otherwise.
SolutionFile parse_solution(std::string_view text, const Graph& graph);

}  // namespace qroute::io
