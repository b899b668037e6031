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
#include "qroute/core.hpp"

namespace qroute {

ChainItem ChainItem::leaf(std::size_t gate) {
  ChainItem item;
  item.gate = gate;
  return item;
}

ChainItem ChainItem::repeat(std::uint64_t count, std::vector<ChainItem> body) {
  ChainItem item;
  item.count = count;
  item.body = std::move(body);
  return item;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw BudgetExceeded("compressed chain length overflows 64 bits");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw BudgetExceeded("compressed chain length overflows 64 bits");
  }
  return out;
}

std::uint64_t items_length(const std::vector<ChainItem>& items) {
  std::uint64_t total = 0;
  for (const auto& item : items) {
    if (item.is_leaf()) {
      total = checked_add(total, 1);
    } else {
      total = checked_add(total, checked_mul(item.count, items_length(item.body)));
    }
  }
  return total;
}

}  // namespace

std::uint64_t CompressedChain::length() const { return items_length(items); }

ChainCursor::ChainCursor(const CompressedChain& chain) {
  stack_.push_back({&chain.items, 0, 1});
}

std::optional<std::size_t> ChainCursor::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.index == top.items->size()) {
      if (--top.remaining > 0) {
        top.index = 0;
      } else {
        stack_.pop_back();
      }
      continue;
    }
    const ChainItem& item = (*top.items)[top.index++];
    if (item.is_leaf()) {
      return item.gate;
    }
    if (!item.body.empty()) {
      stack_.push_back({&item.body, 0, item.count});
    }
  }
  return std::nullopt;
}

}  // namespace qroute
