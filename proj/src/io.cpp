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

#include "qroute/io.hpp"

#include <json.hpp>
#include <map>
#include <unordered_map>

namespace qroute::io {

namespace {

using Json = nlohmann::ordered_json;
using Path = std::vector<PathElement>;

struct LocatedError {
  Path path;
  std::string message;
};

std::string render(const Path& path) {
  std::string out;
  for (const auto& e : path) {
    if (const auto* key = std::get_if<std::string>(&e)) {
      if (!out.empty()) out += '.';
      out += *key;
    } else {
      out += "[" + std::to_string(std::get<std::size_t>(e)) + "]";
    }
  }
  return out.empty() ? "document" : out;
}

Path extend(const Path& path, PathElement e) {
  Path out = path;
  out.push_back(std::move(e));
  return out;
}

[[noreturn]] void fail(const Path& path, std::string message) {
  throw LocatedError{path, std::move(message)};
}

// Templated so that the ordered instance reader and the unordered solution
// reader share them without converting between document types.
template <class J>
const J& member(const J& object, const Path& path, const char* key) {
  if (!object.is_object()) fail(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

template <class J>
std::uint64_t as_count(const J& value, const Path& path) {
  if (!value.is_number_integer() ||
      (!value.is_number_unsigned() && value.template get<std::int64_t>() < 0)) {
    fail(path, "expected a non-negative integer");
  }
  return value.template get<std::uint64_t>();
}

template <class J>
const std::string& as_string(const J& value, const Path& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.template get_ref<const std::string&>();
}

template <class J>
const J& as_array(const J& value, const Path& path) {
  if (!value.is_array()) fail(path, "expected an array");
  return value;
}

class InstanceReader {
 public:
  Instance read(const Json& doc) {
    const Path root;
    if (!doc.is_object()) fail(root, "expected an object");
    read_graph(member(doc, root, "graph"), {"graph"});
    read_tokens(member(doc, root, "tokens"), {"tokens"});
    read_initial(member(doc, root, "initial"), {"initial"});
    if (doc.contains("gates")) read_gates(doc["gates"], {"gates"});
    read_order(doc);
    try {
      validate(inst_);
    } catch (const InvalidInput& e) {
      fail(root, e.what());
    }
    return std::move(inst_);
  }

 private:
  void read_graph(const Json& g, const Path& path) {
    const std::string& type = as_string(member(g, path, "type"), extend(path, "type"));
    const auto n = static_cast<std::size_t>(as_count(member(g, path, "n"), extend(path, "n")));
    if (type == "path") {
      inst_.graph = Graph::path(n);
    } else if (type == "star") {
      inst_.graph = Graph::star(n);
    } else if (type == "edges") {
      const Path epath = extend(path, "edges");
      const Json& list = as_array(member(g, path, "edges"), epath);
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Path at = extend(epath, i);
        if (!list[i].is_array() || list[i].size() != 2) fail(at, "expected a vertex pair");
        const auto u = as_count(list[i][0], extend(at, std::size_t{0}));
        const auto v = as_count(list[i][1], extend(at, std::size_t{1}));
        if (u < 1 || v < 1 || u > n || v > n) fail(at, "vertex out of range 1.." + std::to_string(n));
        if (u == v) fail(at, "self-loop");
        edges.push_back(make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
      }
      inst_.graph = Graph::from_edges(n, std::move(edges));
    } else {
      fail(extend(path, "type"), "unknown graph type '" + type + "'");
    }
  }

  void read_tokens(const Json& list, const Path& path) {
    as_array(list, path);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string& name = as_string(list[i], extend(path, i));
      if (!token_index_.emplace(name, static_cast<Token>(i)).second) {
        fail(extend(path, i), "duplicate token '" + name + "'");
      }
      inst_.tokens.push_back(name);
    }
  }

  Token token(const Json& value, const Path& path) {
    const std::string& name = as_string(value, path);
    auto it = token_index_.find(name);
    if (it == token_index_.end()) fail(path, "unknown token '" + name + "'");
    return it->second;
  }

  void read_initial(const Json& list, const Path& path) {
    as_array(list, path);
    if (list.size() != inst_.graph.size()) {
      fail(path, "initial placement lists " + std::to_string(list.size()) +
                     " tokens for " + std::to_string(inst_.graph.size()) + " vertices");
    }
    std::vector<Token> at;
    std::vector<bool> placed(inst_.tokens.size(), false);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Token t = token(list[i], extend(path, i));
      if (placed[t]) fail(extend(path, i), "token '" + inst_.tokens[t] + "' placed twice");
      placed[t] = true;
      at.push_back(t);
    }
    if (at.size() != inst_.tokens.size()) {
      fail(path, "placement must use every token exactly once");
    }
    inst_.initial = TokenPlacement(std::move(at));
  }

  void read_gates(const Json& list, const Path& path) {
    as_array(list, path);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Path at = extend(path, i);
      const std::string& id = as_string(member(list[i], at, "id"), extend(at, "id"));
      const Path ppath = extend(at, "pair");
      const Json& pair = as_array(member(list[i], at, "pair"), ppath);
      if (pair.size() != 2) fail(ppath, "a gate pairs exactly two tokens");
      const Token a = token(pair[0], extend(ppath, std::size_t{0}));
      const Token b = token(pair[1], extend(ppath, std::size_t{1}));
      if (a == b) fail(ppath, "gate '" + id + "' pairs a token with itself");
      if (!gate_index_.emplace(id, inst_.gates.size()).second) {
        fail(extend(at, "id"), "duplicate gate id '" + id + "'");
      }
      inst_.gates.push_back({id, a, b});
    }
  }

  std::size_t gate(const Json& value, const Path& path) {
    const std::string& id = as_string(value, path);
    auto it = gate_index_.find(id);
    if (it == gate_index_.end()) fail(path, "unknown gate '" + id + "'");
    return it->second;
  }

  std::vector<ChainItem> read_block(const Json& list, const Path& path) {
    as_array(list, path);
    std::vector<ChainItem> items;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Path at = extend(path, i);
      if (list[i].is_string()) {
        items.push_back(ChainItem::leaf(gate(list[i], at)));
      } else {
        const auto count = as_count(member(list[i], at, "count"), extend(at, "count"));
        if (count == 0) fail(extend(at, "count"), "repeat count must be positive");
        items.push_back(
            ChainItem::repeat(count, read_block(member(list[i], at, "block"), extend(at, "block"))));
      }
    }
    return items;
  }

  void read_order(const Json& doc) {
    const int forms = static_cast<int>(doc.contains("precedence")) +
                      static_cast<int>(doc.contains("chain")) +
                      static_cast<int>(doc.contains("repeat"));
    if (forms > 1) fail({}, "'precedence', 'chain' and 'repeat' are mutually exclusive");
    const std::size_t count = inst_.gates.size();
    if (doc.contains("chain")) {
      const Path path{"chain"};
      const Json& list = as_array(doc["chain"], path);
      std::vector<std::size_t> order;
      std::vector<bool> used(count, false);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::size_t s = gate(list[i], extend(path, i));
        if (used[s]) fail(extend(path, i), "gate listed twice in chain");
        used[s] = true;
        order.push_back(s);
      }
      if (order.size() != count) fail(path, "chain must list every gate exactly once");
      inst_.order = Poset::chain(order);
    } else if (doc.contains("repeat")) {
      CompressedChain chain;
      chain.items = read_block(doc["repeat"], {"repeat"});
      inst_.order = std::move(chain);
    } else if (doc.contains("precedence")) {
      const Path path{"precedence"};
      const Json& list = as_array(doc["precedence"], path);
      std::vector<std::pair<std::size_t, std::size_t>> covers;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Path at = extend(path, i);
        if (!list[i].is_array() || list[i].size() != 2) fail(at, "expected a pair of gate ids");
        covers.emplace_back(gate(list[i][0], extend(at, std::size_t{0})),
                            gate(list[i][1], extend(at, std::size_t{1})));
      }
      try {
        inst_.order = Poset(count, std::move(covers));
      } catch (const InvalidInput& e) {
        fail(path, e.what());
      }
    } else {
      inst_.order = Poset::antichain(count);
    }
  }

  Instance inst_;
  std::unordered_map<std::string, Token> token_index_;
  std::unordered_map<std::string, std::size_t> gate_index_;
};

Json write_block(const Instance& inst, const std::vector<ChainItem>& items) {
  Json out = Json::array();
  for (const auto& item : items) {
    if (item.is_leaf()) {
      out.push_back(inst.gates[item.gate].id);
    } else {
      Json entry = Json::object();
      entry["count"] = item.count;
      entry["block"] = write_block(inst, item.body);
      out.push_back(std::move(entry));
    }
  }
  return out;
}

const char* graph_type(GraphKind kind) {
  switch (kind) {
    case GraphKind::path:
      return "path";
    case GraphKind::star:
      return "star";
    case GraphKind::explicit_edges:
      return "edges";
  }
  return "edges";
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  try {
    return InstanceReader().read(doc);
  } catch (const LocatedError& e) {
    std::string prefix;
    if (auto line = locate_line(text, e.path)) prefix = "line " + std::to_string(*line) + ": ";
    throw InvalidInput(prefix + render(e.path) + ": " + e.message);
  }
}

std::string serialize_instance(const Instance& inst) {
  const Vertex base = inst.graph.label_base();
  Json doc = Json::object();
  Json graph = Json::object();
  graph["type"] = graph_type(inst.graph.kind());
  graph["n"] = inst.graph.size();
  if (inst.graph.kind() == GraphKind::explicit_edges) {
    Json edges = Json::array();
    for (const auto& e : inst.graph.edges()) edges.push_back({e.u + base, e.v + base});
    graph["edges"] = std::move(edges);
  }
  doc["graph"] = std::move(graph);
  doc["tokens"] = inst.tokens;
  Json initial = Json::array();
  for (Token t : inst.initial.tokens()) initial.push_back(inst.tokens[t]);
  doc["initial"] = std::move(initial);
  Json gates = Json::array();
  for (const auto& g : inst.gates) {
    Json entry = Json::object();
    entry["id"] = g.id;
    entry["pair"] = {inst.tokens[g.a], inst.tokens[g.b]};
    gates.push_back(std::move(entry));
  }
  doc["gates"] = std::move(gates);
  if (const auto* chain = std::get_if<CompressedChain>(&inst.order)) {
    doc["repeat"] = write_block(inst, chain->items);
  } else {
    const Poset& poset = std::get<Poset>(inst.order);
    const auto topo = poset.topological_order();
    if (poset.size() > 1 && poset == Poset::chain(topo)) {
      Json chain = Json::array();
      for (std::size_t s : topo) chain.push_back(inst.gates[s].id);
      doc["chain"] = std::move(chain);
    } else {
      Json precedence = Json::array();
      for (const auto& [a, b] : poset.covers()) {
        precedence.push_back({inst.gates[a].id, inst.gates[b].id});
      }
      doc["precedence"] = std::move(precedence);
    }
  }
  return doc.dump(2) + "\n";
}

std::string schedule_name(const Instance& instance, std::size_t gate,
                          std::uint64_t occurrence) {
  if (instance.compressed()) {
    return instance.gates[gate].id + "@" + std::to_string(occurrence);
  }
  return instance.gates[gate].id;
}

std::string serialize_solution(const Instance& instance, const Solution& solution,
                               std::string_view algorithm, double elapsed_ms) {
  const Vertex base = instance.graph.label_base();
  Json doc = Json::object();
  doc["length"] = solution.swaps.size();
  Json swaps = Json::array();
  for (const auto& e : solution.swaps) swaps.push_back({e.u + base, e.v + base});
  doc["swaps"] = std::move(swaps);
  Json schedule = Json::object();
  // Names are unique, so entries are appended without ordered_map's linear
  // key lookup (compressed chains can have millions of occurrences).
  auto& entries = static_cast<std::vector<std::pair<const std::string, Json>>&>(
      schedule.get_ref<Json::object_t&>());
  if (instance.compressed()) {
    ChainCursor cursor(std::get<CompressedChain>(instance.order));
    std::uint64_t occurrence = 0;
    while (auto g = cursor.next()) {
      if (occurrence >= solution.schedule.step.size()) break;
      entries.emplace_back(schedule_name(instance, *g, occurrence), solution.schedule.step[occurrence]);
      ++occurrence;
    }
  } else {
    for (std::size_t s = 0; s < instance.gates.size() && s < solution.schedule.step.size(); ++s) {
      entries.emplace_back(instance.gates[s].id, solution.schedule.step[s]);
    }
  }
  doc["schedule"] = std::move(schedule);
  doc["algorithm"] = std::string(algorithm);
  doc["elapsed_ms"] = elapsed_ms;
  return doc.dump(2) + "\n";
}

SolutionFile parse_solution(std::string_view text, const Graph& graph) {
  // Unordered: schedules of compressed chains are too large for ordered_map.
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  SolutionFile out;
  try {
    const Path root;
    const Json& swaps = as_array(member(doc, root, "swaps"), {"swaps"});
    const Vertex base = graph.label_base();
    for (std::size_t i = 0; i < swaps.size(); ++i) {
      const Path at{"swaps", i};
      if (!swaps[i].is_array() || swaps[i].size() != 2) fail(at, "expected a vertex pair");
      const auto u = as_count(swaps[i][0], extend(at, std::size_t{0}));
      const auto v = as_count(swaps[i][1], extend(at, std::size_t{1}));
      if (u < base || v < base || u - base >= graph.size() || v - base >= graph.size() || u == v ||
          !graph.adjacent(static_cast<Vertex>(u - base), static_cast<Vertex>(v - base))) {
        std::string where;
        if (auto line = locate_line(text, at)) where = "line " + std::to_string(*line) + ": ";
        throw InvalidEdge(where + render(at) + ": {" + std::to_string(u) + "," +
                          std::to_string(v) + "} is not an edge");
      }
      out.swaps.push_back(make_edge(static_cast<Vertex>(u - base), static_cast<Vertex>(v - base)));
    }
    const auto length = as_count(member(doc, root, "length"), {"length"});
    if (length != out.swaps.size()) {
      fail({"length"}, "length " + std::to_string(length) + " differs from the " +
                           std::to_string(out.swaps.size()) + " listed swaps");
    }
    if (doc.contains("schedule")) {
      const Json& schedule = doc["schedule"];
      if (!schedule.is_object()) fail({"schedule"}, "expected an object");
      for (const auto& [id, step] : schedule.items()) {
        out.schedule.emplace_back(id, static_cast<std::size_t>(
                                          as_count(step, {"schedule", std::string(id)})));
      }
    }
    if (doc.contains("algorithm")) out.algorithm = as_string(doc["algorithm"], {"algorithm"});
    if (doc.contains("elapsed_ms")) {
      if (!doc["elapsed_ms"].is_number()) fail({"elapsed_ms"}, "expected a number");
      out.elapsed_ms = doc["elapsed_ms"].get<double>();
    }
  } catch (const LocatedError& e) {
    std::string prefix;
    if (auto line = locate_line(text, e.path)) prefix = "line " + std::to_string(*line) + ": ";
    throw InvalidInput(prefix + render(e.path) + ": " + e.message);
  }
  return out;
}

}  // namespace qroute::io
