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
#include "qroute/disjoint.hpp"

#include <algorithm>
#include <map>

namespace qroute {

namespace {

struct Interval {
  Vertex lo;
  Vertex hi;
};

Interval interval_of(const TokenPlacement& f, const Gate& g) {
  const Vertex a = f.vertex_of(g.a);
  const Vertex b = f.vertex_of(g.b);
  return a < b ? Interval{a, b} : Interval{b, a};
}

}  // namespace

std::size_t gap_of(const TokenPlacement& placement, Token a, Token b) {
  const Vertex va = placement.vertex_of(a);
  const Vertex vb = placement.vertex_of(b);
  if (va == vb) {
    throw InvalidInput("gap of a token with itself");
  }
  return (va > vb ? va - vb : vb - va) - 1;
}

void require_disjoint_pairs(std::span<const Gate> gates,
                            std::span<const std::string> token_names) {
  std::map<Token, const Gate*> owner;
  for (const auto& g : gates) {
    for (Token t : {g.a, g.b}) {
      auto [it, fresh] = owner.emplace(t, &g);
      if (!fresh) {
        const std::string name = t < token_names.size() ? "'" + token_names[t] + "'"
                                                        : "#" + std::to_string(t);
        throw InvalidInput("gates '" + it->second->id + "' and '" + g.id +
                           "' share token " + name + "; pairs are not disjoint");
      }
    }
  }
}

std::size_t cross_count(const TokenPlacement& placement, std::span<const Gate> gates) {
  require_disjoint_pairs(gates);
  std::vector<Interval> spans;
  spans.reserve(gates.size());
  for (const auto& g : gates) spans.push_back(interval_of(placement, g));
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      const auto& p = spans[i];
      const auto& q = spans[j];
      if ((p.lo < q.lo && q.lo < p.hi && p.hi < q.hi) ||
          (q.lo < p.lo && p.lo < q.hi && q.hi < p.hi)) {
        ++crossings;
      }
    }
  }
  return crossings;
}

PotentialReport value_of(const TokenPlacement& placement, std::span<const Gate> gates) {
  PotentialReport report;
  report.cross = static_cast<long>(cross_count(placement, gates));
  for (const auto& g : gates) {
    report.gap += static_cast<long>(gap_of(placement, g.a, g.b));
  }
  report.value = report.gap - report.cross;
  return report;
}

Solution solve_disjoint(const Instance& instance) {
  validate(instance);
  if (instance.graph.kind() != GraphKind::path) {
    throw InvalidInput("the disjoint-pairs algorithm requires a path graph");
  }
  if (instance.compressed()) {
    throw InvalidInput("the disjoint-pairs algorithm needs an explicit poset");
  }
  require_disjoint_pairs(instance.gates, instance.tokens);

  Solution solution;
  TokenPlacement f = instance.initial;
  for (;;) {
    // Rightmost left endpoint among gates that are not yet adjacent. Pairs
    // are disjoint, so at most one gate has its left endpoint there.
    std::optional<Vertex> pivot;
    for (const auto& g : instance.gates) {
      const Interval span = interval_of(f, g);
      if (span.hi >= span.lo + 2 && (!pivot || span.lo > *pivot)) {
        pivot = span.lo;
      }
    }
    if (!pivot) break;
    const Edge e{*pivot, *pivot + 1};
    f.swap_vertices(e.u, e.v);
    solution.swaps.push_back(e);
  }
  auto schedule = verify(instance, solution.swaps);
  if (!schedule) {
    throw std::logic_error("disjoint-pairs construction is infeasible");
  }
  solution.schedule = std::move(*schedule);
  return solution;
}

}  // namespace qroute
