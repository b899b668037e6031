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

#include "qroute/io.hpp"

namespace qroute::io {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::optional<std::size_t> find(std::span<const PathElement> path) {
    skip_ws();
    if (path.empty()) return line_at(pos_);
    if (pos_ >= text_.size()) return std::nullopt;
    const char c = text_[pos_];
    if (c == '{') {
      const auto* key = std::get_if<std::string>(&path.front());
      ++pos_;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] == '}') return std::nullopt;
        const std::string name = read_string();
        skip_ws();
        ++pos_;  // ':'
        if (key && name == *key) return find(path.subspan(1));
        skip_value();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
      }
    }
    if (c == '[') {
      const auto* index = std::get_if<std::size_t>(&path.front());
      ++pos_;
      for (std::size_t i = 0;; ++i) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] == ']') return std::nullopt;
        if (index && i == *index) return find(path.subspan(1));
        skip_value();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t line_at(std::size_t pos) const {
    return 1 + static_cast<std::size_t>(
                   std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n'));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::string read_string() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
        out.push_back(text_[pos_]);
        ++pos_;
      }
      out.push_back(text_[pos_++]);
    }
    ++pos_;
    return out;
  }

  void skip_value() {
    skip_ws();
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '"') {
      read_string();
      return;
    }
    if (c == '{' || c == '[') {
      int depth = 0;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if (d == '"') {
          read_string();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++pos_;
        if (depth == 0) return;
      }
      return;
    }
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}' &&
           text_[pos_] != ']') {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<std::size_t> locate_line(std::string_view text,
                                       std::span<const PathElement> path) {
  return Scanner(text).find(path);
}

}  // namespace qroute::io
