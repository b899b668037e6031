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

Poset::Poset(std::size_t size,
             std::vector<std::pair<std::size_t, std::size_t>> covers)
    : preds_(size), succs_(size) {
  for (const auto& [a, b] : covers) {
    if (a >= size || b >= size) {
      throw InvalidInput("precedence refers to element outside 0.." +
                         std::to_string(size));
    }
    if (a == b) {
      throw CycleError("element " + std::to_string(a) + " precedes itself");
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  covers_ = std::move(covers);
  for (const auto& [a, b] : covers_) {
    succs_[a].push_back(b);
    preds_[b].push_back(a);
  }
  if (topological_order().size() != size) {
    throw CycleError("precedence relation contains a cycle");
  }
}

Poset Poset::antichain(std::size_t size) { return Poset(size, {}); }

Poset Poset::chain(std::span<const std::size_t> order) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    covers.emplace_back(order[i], order[i + 1]);
  }
  return Poset(order.size(), std::move(covers));
}

std::vector<std::size_t> Poset::topological_order() const {
  const std::size_t n = size();
  std::vector<std::size_t> indegree(n);
  for (std::size_t s = 0; s < n; ++s) indegree[s] = preds_[s].size();
  // Min-index first: keep the frontier sorted.
  std::vector<std::size_t> frontier;
  for (std::size_t s = 0; s < n; ++s) {
    if (indegree[s] == 0) frontier.push_back(s);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!frontier.empty()) {
    auto it = std::min_element(frontier.begin(), frontier.end());
    const std::size_t s = *it;
    frontier.erase(it);
    order.push_back(s);
    for (std::size_t t : succs_[s]) {
      if (--indegree[t] == 0) frontier.push_back(t);
    }
  }
  return order;
}

bool Poset::is_chain() const {
  const std::size_t n = size();
  std::vector<std::size_t> indegree(n);
  std::vector<std::size_t> frontier;
  for (std::size_t s = 0; s < n; ++s) {
    indegree[s] = preds_[s].size();
    if (indegree[s] == 0) frontier.push_back(s);
  }
  std::size_t emitted = 0;
  while (!frontier.empty()) {
    if (frontier.size() > 1) return false;
    const std::size_t s = frontier.back();
    frontier.pop_back();
    ++emitted;
    for (std::size_t t : succs_[s]) {
      if (--indegree[t] == 0) frontier.push_back(t);
    }
  }
  return emitted == n;
}

namespace {

class ExtensionWalker {
 public:
  ExtensionWalker(const Poset& poset,
                  const std::function<bool(std::span<const std::size_t>)>& visit)
      : poset_(poset), visit_(visit), indegree_(poset.size()),
        used_(poset.size(), false) {
    for (std::size_t s = 0; s < poset.size(); ++s) {
      indegree_[s] = poset.predecessors(s).size();
    }
    prefix_.reserve(poset.size());
  }

  // Returns false once the visitor asked to stop.
  bool run() {
    if (prefix_.size() == poset_.size()) {
      return visit_(prefix_);
    }
    for (std::size_t s = 0; s < poset_.size(); ++s) {
      if (used_[s] || indegree_[s] != 0) continue;
      used_[s] = true;
      prefix_.push_back(s);
      for (std::size_t t : poset_.successors(s)) --indegree_[t];
      const bool keep_going = run();
      for (std::size_t t : poset_.successors(s)) ++indegree_[t];
      prefix_.pop_back();
      used_[s] = false;
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  const Poset& poset_;
  const std::function<bool(std::span<const std::size_t>)>& visit_;
  std::vector<std::size_t> indegree_;
  std::vector<bool> used_;
  std::vector<std::size_t> prefix_;
};

}  // namespace

void for_each_linear_extension(
    const Poset& poset,
    const std::function<bool(std::span<const std::size_t>)>& visit) {
  ExtensionWalker(poset, visit).run();
}

std::vector<std::vector<std::size_t>> linear_extensions(const Poset& poset) {
  std::vector<std::vector<std::size_t>> out;
  for_each_linear_extension(poset, [&](std::span<const std::size_t> order) {
    out.emplace_back(order.begin(), order.end());
    return true;
  });
  return out;
}

}  // namespace qroute
