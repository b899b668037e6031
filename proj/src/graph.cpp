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

#include <algorithm>
#include <string>

#include "qroute/core.hpp"

namespace qroute {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw InvalidEdge("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::path(std::size_t n) {
  Graph g;
  g.kind_ = GraphKind::path;
  g.n_ = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.edges_.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  return g;
}

Graph Graph::star(std::size_t n) {
  Graph g;
  g.kind_ = GraphKind::star;
  g.n_ = n;
  for (std::size_t i = 1; i < n; ++i) {
    g.edges_.push_back({0, static_cast<Vertex>(i)});
  }
  return g;
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  Graph g;
  g.kind_ = GraphKind::explicit_edges;
  g.n_ = n;
  for (auto& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.v >= n) {
      throw InvalidEdge("edge endpoint " + std::to_string(e.v) +
                        " out of range for " + std::to_string(n) + " vertices");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a == b || a >= n_ || b >= n_) {
    return false;
  }
  switch (kind_) {
    case GraphKind::path:
      return (a > b ? a - b : b - a) == 1;
    case GraphKind::star:
      return a == 0 || b == 0;
    case GraphKind::explicit_edges:
      break;
  }
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Graph::connected() const {
  if (n_ <= 1) {
    return true;
  }
  if (kind_ != GraphKind::explicit_edges) {
    return true;
  }
  std::vector<std::size_t> parent(n_);
  for (std::size_t i = 0; i < n_; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n_;
  for (const auto& e : edges_) {
    const auto ru = find(e.u);
    const auto rv = find(e.v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

}  // namespace qroute
