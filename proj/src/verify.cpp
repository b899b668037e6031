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
#include <string>

#include "qroute/core.hpp"

namespace qroute {

void check_swaps(const Graph& graph, const SwapSequence& swaps) {
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    if (!graph.has_edge(swaps[i])) {
      throw InvalidEdge("swap " + std::to_string(i) + " on {" +
                        std::to_string(swaps[i].u + graph.label_base()) + "," +
                        std::to_string(swaps[i].v + graph.label_base()) +
                        "} is not an edge");
    }
  }
}

namespace {

// Greedy earliest realization over an explicit poset. Realizing a gate as
// soon as its predecessors are realized and its pair is adjacent never delays
// any successor, so this decides feasibility exactly.
bool greedy_poset(const Instance& instance, const SwapSequence& swaps,
                  const RealizationVisitor& visit, Schedule* schedule) {
  const Poset& poset = instance.poset();
  const Graph& graph = instance.graph;
  const std::size_t count = poset.size();
  std::vector<std::size_t> waiting_on(count);
  std::vector<std::size_t> ready;
  for (std::size_t s = 0; s < count; ++s) {
    waiting_on[s] = poset.predecessors(s).size();
    if (waiting_on[s] == 0) ready.push_back(s);
  }
  if (schedule) schedule->step.assign(count, 0);

  TokenPlacement f = instance.initial;
  std::size_t remaining = count;
  std::uint64_t occurrence = 0;
  std::vector<std::size_t> worklist;
  for (std::size_t t = 0;; ++t) {
    worklist.swap(ready);
    ready.clear();
    while (!worklist.empty()) {
      const std::size_t s = worklist.back();
      worklist.pop_back();
      const Gate& g = instance.gates[s];
      if (!graph.adjacent(f.vertex_of(g.a), f.vertex_of(g.b))) {
        ready.push_back(s);
        continue;
      }
      --remaining;
      if (schedule) schedule->step[s] = t;
      if (visit) visit(occurrence++, s, t);
      for (std::size_t succ : poset.successors(s)) {
        if (--waiting_on[succ] == 0) worklist.push_back(succ);
      }
    }
    if (remaining == 0) return true;
    if (t == swaps.size()) return false;
    f.swap_vertices(swaps[t].u, swaps[t].v);
  }
}

bool greedy_chain(const Instance& instance, const SwapSequence& swaps,
                  const RealizationVisitor& visit, Schedule* schedule) {
  ChainCursor cursor(std::get<CompressedChain>(instance.order));
  const Graph& graph = instance.graph;
  TokenPlacement f = instance.initial;
  std::optional<std::size_t> current = cursor.next();
  std::uint64_t occurrence = 0;
  for (std::size_t t = 0;; ++t) {
    while (current) {
      const Gate& g = instance.gates[*current];
      if (!graph.adjacent(f.vertex_of(g.a), f.vertex_of(g.b))) break;
      if (schedule) schedule->step.push_back(t);
      if (visit) visit(occurrence, *current, t);
      ++occurrence;
      current = cursor.next();
    }
    if (!current) return true;
    if (t == swaps.size()) return false;
    f.swap_vertices(swaps[t].u, swaps[t].v);
  }
}

bool run_greedy(const Instance& instance, const SwapSequence& swaps,
                const RealizationVisitor& visit, Schedule* schedule) {
  check_swaps(instance.graph, swaps);
  if (instance.compressed()) {
    return greedy_chain(instance, swaps, visit, schedule);
  }
  return greedy_poset(instance, swaps, visit, schedule);
}

}  // namespace

std::optional<Schedule> verify(const Instance& instance,
                               const SwapSequence& swaps) {
  Schedule schedule;
  if (!run_greedy(instance, swaps, {}, &schedule)) {
    return std::nullopt;
  }
  return schedule;
}

bool verify_streaming(const Instance& instance, const SwapSequence& swaps,
                      const RealizationVisitor& visit) {
  return run_greedy(instance, swaps, visit, nullptr);
}

}  // namespace qroute
