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

TokenPlacement::TokenPlacement(std::vector<Token> token_at)
    : at_(std::move(token_at)), where_(at_.size(), 0) {
  std::vector<bool> seen(at_.size(), false);
  for (std::size_t v = 0; v < at_.size(); ++v) {
    const Token t = at_[v];
    if (t >= at_.size() || seen[t]) {
      throw InvalidInput("token placement is not a bijection (token " +
                         std::to_string(t) + " at vertex " + std::to_string(v) +
                         ")");
    }
    seen[t] = true;
    where_[t] = static_cast<Vertex>(v);
  }
}

TokenPlacement TokenPlacement::identity(std::size_t n) {
  std::vector<Token> at(n);
  for (std::size_t i = 0; i < n; ++i) at[i] = static_cast<Token>(i);
  return TokenPlacement(std::move(at));
}

Vertex TokenPlacement::vertex_of(Token t) const {
  if (t >= where_.size()) {
    throw UnknownToken("unknown token " + std::to_string(t));
  }
  return where_[t];
}

void TokenPlacement::swap_vertices(Vertex a, Vertex b) {
  std::swap(at_[a], at_[b]);
  where_[at_[a]] = a;
  where_[at_[b]] = b;
}

TokenPlacement apply_swap(const TokenPlacement& placement, Edge edge,
                          const Graph& graph) {
  if (!graph.has_edge(edge)) {
    throw InvalidEdge("{" + std::to_string(edge.u + graph.label_base()) + "," +
                      std::to_string(edge.v + graph.label_base()) +
                      "} is not an edge");
  }
  TokenPlacement next = placement;
  next.swap_vertices(edge.u, edge.v);
  return next;
}

bool is_realized(const TokenPlacement& placement, Token a, Token b,
                 const Graph& graph) {
  return graph.adjacent(placement.vertex_of(a), placement.vertex_of(b));
}

}  // namespace qroute
