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


// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance QROUTE_BINARY WORK_DIR

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "qroute/disjoint.hpp"
#include "qroute/fpt.hpp"
#include "qroute/io.hpp"
#include "qroute/oracle.hpp"
#include "qroute/reductions.hpp"
#include "support/brute.hpp"
#include "support/random_instances.hpp"

namespace fs = std::filesystem;
using namespace qroute;
using qroute::testing::PosetShape;

namespace {

// Every solution any criterion produces on a connected graph is checked
// against |V||S| here and reported under the bound criterion.
struct BoundLedger {
  std::size_t checked = 0;
  std::size_t violations = 0;

  void record(const Instance& inst, std::size_t length) {
    if (!inst.graph.connected()) return;
    ++checked;
    if (length > trivial_length_bound(inst)) ++violations;
  }
};

BoundLedger bounds;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body,
            double time_limit_s = 60.0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= time_limit_s) {
    outcome.pass = false;
    outcome.detail += "; over the " + std::to_string(static_cast<int>(time_limit_s)) + " s limit";
  }
  if (!outcome.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << id << ' ' << title << ": "
            << outcome.detail << " (" << timing << ")" << std::endl;
}

std::string count_line(std::size_t good, std::size_t total, const char* what) {
  return std::to_string(good) + "/" + std::to_string(total) + " " + what + ", tolerance 0";
}

// ---------------------------------------------------------------------------

Outcome oracle_minimality() {
  std::mt19937_64 rng(0xA1);
  std::size_t agree = 0;
  std::size_t longest = 0;
  const std::size_t total = 200;
  for (std::size_t trial = 0; trial < total; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto inst = qroute::testing::random_path_instance(rng, n, 1 + rng() % 3,
                                                            qroute::testing::random_shape(rng));
    const auto sol = solve_exact(inst);
    if (!sol) continue;
    bounds.record(inst, sol->swaps.size());
    longest = std::max(longest, sol->swaps.size());
    const auto reference = qroute::testing::iterative_deepening(inst, sol->swaps.size());
    if (reference && *reference == sol->swaps.size() && verify(inst, sol->swaps)) ++agree;
  }
  return {agree == total, count_line(agree, total, "exact lengths equal iterative deepening") +
                              " (longest optimum " + std::to_string(longest) + ")"};
}

Outcome fpt_exactness() {
  std::mt19937_64 rng(0xA2);
  std::size_t agree = 0;
  std::size_t chains = 0;
  std::size_t longest = 0;
  const std::size_t total = 200;
  for (std::size_t trial = 0; trial < total; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const PosetShape shape = trial % 2 == 0 ? PosetShape::chain : qroute::testing::random_shape(rng);
    const auto inst = qroute::testing::random_path_instance(rng, n, 1 + rng() % 3, shape);
    if (inst.poset().is_chain()) ++chains;
    const auto sol = fpt::solve_fpt(inst);
    const auto exact = solve_exact(inst);
    bounds.record(inst, sol.swaps.size());
    longest = std::max(longest, sol.swaps.size());
    if (exact && exact->swaps.size() == sol.swaps.size() && verify(inst, sol.swaps)) ++agree;
  }
  return {agree == total, count_line(agree, total, "fpt lengths equal exact") + " (" +
                              std::to_string(chains) + " chains, longest optimum " +
                              std::to_string(longest) + ")"};
}

Outcome disjoint_optimality() {
  std::mt19937_64 rng(0xA3);
  std::size_t agree = 0;
  std::size_t steps = 0;
  std::size_t bad_steps = 0;
  const std::size_t total = 200;
  for (std::size_t trial = 0; trial < total; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(3, n / 2);
    const auto inst = qroute::testing::random_disjoint_instance(
        rng, n, k, qroute::testing::random_shape(rng));
    const long value = value_of(inst.initial, inst.gates).value;
    const auto sol = solve_disjoint(inst);
    const auto exact = solve_exact(inst);
    bounds.record(inst, sol.swaps.size());
    TokenPlacement f = inst.initial;
    long previous = value;
    for (const auto& e : sol.swaps) {
      f = apply_swap(f, e, inst.graph);
      const long now = value_of(f, inst.gates).value;
      ++steps;
      if (now != previous - 1) ++bad_steps;
      previous = now;
    }
    if (static_cast<long>(sol.swaps.size()) == value && exact &&
        exact->swaps.size() == sol.swaps.size() && verify(inst, sol.swaps)) {
      ++agree;
    }
  }
  std::size_t walk_drops = 0;
  const std::size_t walk_total = 1000;
  {
    auto inst = qroute::testing::random_disjoint_instance(rng, 7, 3, PosetShape::antichain);
    TokenPlacement f = inst.initial;
    for (std::size_t i = 0; i < walk_total; ++i) {
      if (i % 50 == 0) {
        const std::size_t n = 2 + rng() % 6;
        inst = qroute::testing::random_disjoint_instance(rng, n, 1 + rng() % std::min<std::size_t>(3, n / 2),
                                                         PosetShape::antichain);
        f = inst.initial;
      }
      const long before = value_of(f, inst.gates).value;
      f = apply_swap(f, inst.graph.edges()[rng() % inst.graph.edges().size()], inst.graph);
      if (value_of(f, inst.gates).value < before - 1) ++walk_drops;
    }
  }
  const bool pass = agree == total && bad_steps == 0 && walk_drops == 0;
  return {pass, count_line(agree, total, "satisfy length = value = exact") + "; " +
                    std::to_string(steps - bad_steps) + "/" + std::to_string(steps) +
                    " constructed steps drop value by exactly 1; " +
                    std::to_string(walk_total - walk_drops) + "/" + std::to_string(walk_total) +
                    " random swaps drop value by at most 1"};
}

// All strictly increasing position tuples of the given size in [0, n).
void position_sets(std::size_t n, std::size_t size, std::vector<std::size_t>& current,
                   std::size_t from, std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t p = from; p < n; ++p) {
    current.push_back(p);
    position_sets(n, size, current, p + 1, out);
    current.pop_back();
  }
}

Outcome distance_formula() {
  std::size_t agree = 0;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t kt = 1; kt <= std::min<std::size_t>(3, n); ++kt) {
      std::vector<std::vector<std::size_t>> sets;
      std::vector<std::size_t> scratch;
      position_sets(n, kt, scratch, 0, sets);
      for (const auto& from : sets) {
        for (const auto& to : sets) {
          std::vector<int> x;
          std::vector<int> y;
          for (std::size_t i = 0; i < kt; ++i) {
            x.push_back(static_cast<int>(from[i]) - (i ? static_cast<int>(from[i - 1]) : -1));
            y.push_back(static_cast<int>(to[i]) - (i ? static_cast<int>(to[i - 1]) : -1));
          }
          ++total;
          if (fpt::sig_distance(x, y) == qroute::testing::restricted_distance(n, from, to)) ++agree;
        }
      }
    }
  }
  return {agree == total, count_line(agree, total, "signature pairs equal restricted BFS")};
}

Outcome ola_sufficiency() {
  const auto h = reductions::make_simple_graph({"1", "2"}, {{0, 1}});
  const auto ola = reductions::gen_ola(h, 1);
  const auto& p = ola.params;
  const std::vector<std::size_t> identity{1, 2};
  const auto witness = reductions::ola_witness(h, 1, identity);
  std::uint64_t realized = 0;
  const bool feasible = verify_streaming(ola.instance, witness.swaps,
                                         [&](std::uint64_t, std::size_t, std::size_t) { ++realized; });
  bounds.record(ola.instance, witness.swaps.size());
  const std::uint64_t limit = 2 * p.beta * (p.k * p.alpha + p.alpha - p.m);
  const std::uint64_t excursion = 2 * 1 * p.alpha - 2;
  const bool lengths_ok = std::all_of(witness.excursion_lengths.begin(), witness.excursion_lengths.end(),
                                      [&](std::size_t len) { return len == excursion; });
  const bool pass = feasible && realized == p.chain_length && witness.swaps.size() < limit &&
                    lengths_ok && witness.excursion_lengths.size() == p.m;
  std::ostringstream detail;
  detail << (feasible ? "witness feasible" : "witness INFEASIBLE") << " (" << realized << "/"
         << p.chain_length << " gates), length " << witness.swaps.size() << " < " << limit
         << ", excursion length " << (witness.excursion_lengths.empty() ? 0 : witness.excursion_lengths[0])
         << " = " << excursion << ", tolerance 0";
  return {pass, detail.str()};
}

Outcome vertex_cover_equivalence() {
  std::size_t agree = 0;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (std::size_t v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1u) edges.push_back(slots[i]);
      }
      const auto h = reductions::make_simple_graph(labels, edges);
      const Instance inst = reductions::gen_vc(h);
      const auto sol = solve_exact(inst);
      ++total;
      if (!sol) continue;
      bounds.record(inst, sol->swaps.size());
      if (sol->swaps.size() == qroute::testing::brute_min_vertex_cover(h)) ++agree;
    }
  }
  return {agree == total, count_line(agree, total, "labeled graphs: star optimum equals min vertex cover")};
}

// Strict partial orders on `size` labeled elements as relation bitmasks over
// ordered pairs (a, b), bit a * size + b.
std::vector<std::uint32_t> strict_orders(std::size_t size) {
  std::vector<std::uint32_t> out;
  const std::size_t bits = size * size;
  for (std::uint32_t rel = 0; rel < (1u << bits); ++rel) {
    bool ok = true;
    auto has = [&](std::size_t a, std::size_t b) { return (rel >> (a * size + b)) & 1u; };
    for (std::size_t a = 0; a < size && ok; ++a) {
      if (has(a, a)) ok = false;
      for (std::size_t b = 0; b < size && ok; ++b) {
        if (has(a, b) && has(b, a)) ok = false;
        for (std::size_t c = 0; c < size && ok; ++c) {
          if (has(a, b) && has(b, c) && !has(a, c)) ok = false;
        }
      }
    }
    if (ok) out.push_back(rel);
  }
  return out;
}

struct Sequence {
  SwapSequence swaps;
  std::vector<std::uint32_t> pair_steps;  // per token pair: bitmask of adjacent steps
};

Outcome verifier_soundness() {
  std::size_t checked = 0;
  std::size_t agree = 0;
  std::size_t instances = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const Graph path = Graph::path(n);
    std::vector<std::pair<Token, Token>> pairs;
    for (Token a = 0; a < n; ++a) {
      for (Token b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    // Every swap sequence of length <= 6 with its realization profile.
    std::vector<Sequence> sequences;
    std::function<void(Sequence&, const TokenPlacement&)> grow = [&](Sequence& seq,
                                                                     const TokenPlacement& f) {
      const std::size_t step = seq.swaps.size();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const bool adjacent = is_realized(f, pairs[i].first, pairs[i].second, path);
        seq.pair_steps[i] = (seq.pair_steps[i] & ((1u << step) - 1)) | (adjacent ? 1u << step : 0u);
      }
      sequences.push_back(seq);
      if (step == 6) return;
      for (const Edge& e : path.edges()) {
        seq.swaps.push_back(e);
        grow(seq, apply_swap(f, e, path));
        seq.swaps.pop_back();
      }
    };
    Sequence root{{}, std::vector<std::uint32_t>(pairs.size(), 0)};
    grow(root, TokenPlacement::identity(n));

    for (std::size_t size = 0; size <= 4; ++size) {
      const auto orders = strict_orders(size);
      std::vector<std::size_t> perm(size);
      std::vector<std::vector<std::size_t>> perms;
      std::iota(perm.begin(), perm.end(), 0);
      do perms.push_back(perm);
      while (std::next_permutation(perm.begin(), perm.end()));

      std::size_t assignments = 1;
      for (std::size_t i = 0; i < size; ++i) assignments *= pairs.size();
      auto encode = [&](std::uint32_t rel, const std::vector<std::size_t>& assign) {
        std::uint64_t code = rel;
        for (std::size_t s = 0; s < size; ++s) code = code * 8 + assign[s];
        return code;
      };
      std::unordered_map<std::uint64_t, bool> brute_memo;
      for (std::size_t oi = 0; oi < orders.size(); ++oi) {
        const std::uint32_t rel = orders[oi];
        for (std::size_t code = 0; code < assignments; ++code) {
          std::vector<std::size_t> assign(size);
          for (std::size_t s = 0, c = code; s < size; ++s, c /= pairs.size()) assign[s] = c % pairs.size();
          // Keep one representative per relabeling of the gates.
          const std::uint64_t self = encode(rel, assign);
          bool canonical = true;
          for (const auto& pm : perms) {
            std::uint32_t prel = 0;
            std::vector<std::size_t> passign(size);
            for (std::size_t a = 0; a < size; ++a) {
              passign[pm[a]] = assign[a];
              for (std::size_t b = 0; b < size; ++b) {
                if ((rel >> (a * size + b)) & 1u) prel |= 1u << (pm[a] * size + pm[b]);
              }
            }
            if (encode(prel, passign) < self) {
              canonical = false;
              break;
            }
          }
          if (!canonical) continue;
          ++instances;

          Instance inst;
          inst.graph = path;
          for (std::size_t t = 0; t < n; ++t) inst.tokens.push_back("t" + std::to_string(t));
          inst.initial = TokenPlacement::identity(n);
          std::vector<std::pair<std::size_t, std::size_t>> relation;
          for (std::size_t s = 0; s < size; ++s) {
            inst.gates.push_back({"g" + std::to_string(s), pairs[assign[s]].first, pairs[assign[s]].second});
            for (std::size_t b = 0; b < size; ++b) {
              if ((rel >> (s * size + b)) & 1u) relation.emplace_back(s, b);
            }
          }
          inst.order = Poset(size, relation);

          for (const auto& seq : sequences) {
            const std::size_t steps = seq.swaps.size() + 1;
            // Brute force over every map S -> {0..l}: the answer depends only
            // on the order and the per-gate sets of realizing steps.
            std::uint64_t key = oi;
            for (std::size_t s = 0; s < size; ++s) key = (key << 7) | seq.pair_steps[assign[s]];
            key = key * 8 + steps;
            auto [it, fresh] = brute_memo.emplace(key, false);
            if (fresh) {
              std::vector<std::size_t> map(size, 0);
              bool found = false;
              for (;;) {
                bool ok = true;
                for (std::size_t s = 0; s < size && ok; ++s) ok = (seq.pair_steps[assign[s]] >> map[s]) & 1u;
                for (const auto& [a, b] : relation) {
                  if (!ok) break;
                  ok = map[a] <= map[b];
                }
                if (ok) {
                  found = true;
                  break;
                }
                std::size_t digit = 0;
                while (digit < size && ++map[digit] == steps) map[digit++] = 0;
                if (digit == size) break;
              }
              it->second = found;
            }
            ++checked;
            if (verify(inst, seq.swaps).has_value() == it->second) ++agree;
          }
        }
      }
    }
  }
  return {agree == checked,
          count_line(agree, checked, "(instance, sequence) pairs agree with brute force") + " over " +
              std::to_string(instances) + " instances up to token and gate renaming"};
}

Outcome bound_sanity() {
  std::mt19937_64 rng(0xA8);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const bool star = trial % 3 == 0;
    auto inst = qroute::testing::random_path_instance(rng, n, rng() % 4, qroute::testing::random_shape(rng));
    if (star) inst.graph = Graph::star(n);
    const auto sol = solve_exact(inst);
    if (sol) bounds.record(inst, sol->swaps.size());
    if (!star) bounds.record(inst, fpt::solve_fpt(inst).swaps.size());
  }
  const bool lmax = fpt::l_max(1) == 3 && fpt::l_max(2) == 50;
  const bool pass = lmax && bounds.violations == 0 && bounds.checked > 0;
  return {pass, std::to_string(bounds.checked - bounds.violations) + "/" + std::to_string(bounds.checked) +
                    " solutions within |V||S|; l_max(1)=" + std::to_string(fpt::l_max(1)) +
                    " l_max(2)=" + std::to_string(fpt::l_max(2)) + ", tolerance 0"};
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int shell(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

// Writes the random part of the corpus from `seed`; returns the file names.
std::vector<std::string> write_corpus(const fs::path& dir, std::uint64_t seed) {
  fs::create_directories(dir);
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  auto put = [&](const std::string& name, const Instance& inst) {
    std::ofstream(dir / name, std::ios::binary) << io::serialize_instance(inst);
    names.push_back(name);
  };
  for (int i = 0; i < 40; ++i) {
    put("path_" + std::to_string(i) + ".json",
        qroute::testing::random_path_instance(rng, 2 + rng() % 5, rng() % 5, qroute::testing::random_shape(rng)));
  }
  for (int i = 0; i < 15; ++i) {
    const std::size_t n = 2 + rng() % 6;
    put("disjoint_" + std::to_string(i) + ".json",
        qroute::testing::random_disjoint_instance(rng, n, rng() % (n / 2 + 1), qroute::testing::random_shape(rng)));
  }
  for (int i = 0; i < 15; ++i) {
    auto inst = qroute::testing::random_path_instance(rng, 2 + rng() % 4, rng() % 4, PosetShape::random);
    inst.graph = Graph::star(inst.graph.size());
    put("star_" + std::to_string(i) + ".json", inst);
  }
  return names;
}

Outcome cli_pipeline(const std::string& binary, const fs::path& work) {
  fs::remove_all(work);
  const fs::path a = work / "run_a";
  const fs::path b = work / "run_b";
  const std::uint64_t seed = 0xC0DE;
  auto names = write_corpus(a, seed);
  write_corpus(b, seed);

  struct Gen {
    std::string name;
    std::string args;
    bool witness;
  };
  const std::vector<Gen> gens{
      {"vc_triangle", "gen vc --edges 1-2,2-3,1-3", false},
      {"vc_path4", "gen vc --edges 1-2,2-3,3-4 --seed 11", false},
      {"vc_star4", "gen vc --edges 1-2,1-3,1-4 --seed 4", false},
      {"vc_k4", "gen vc --edges 1-2,1-3,1-4,2-3,2-4,3-4", false},
      {"vc_isolated", "gen vc --edges 1-2 --vertices 3", false},
      {"ola_k2", "gen ola --edges 1-2 --k 1", true},
      {"ola_k2_seeded", "gen ola --edges 1-2 --k 1 --seed 7", true},
      {"ola_p3", "gen ola --edges 1-2,2-3 --k 2 --seed 3", true},
  };
  std::size_t failures_seen = 0;
  std::vector<std::string> problems;
  auto note = [&](const std::string& what) {
    ++failures_seen;
    if (problems.size() < 3) problems.push_back(what);
  };
  for (const auto& g : gens) {
    for (const fs::path& dir : {a, b}) {
      std::string cmd = quote(binary) + " " + g.args + " -o " + quote(dir / (g.name + ".json"));
      if (g.witness) cmd += " --witness " + quote(dir / (g.name + ".witness.json"));
      if (shell(cmd) != 0) note(g.name + ": generation failed");
    }
  }

  std::size_t pipelines = 0;
  std::size_t ok = 0;
  for (const auto& g : gens) {
    if (!g.witness) {
      names.push_back(g.name + ".json");
      continue;
    }
    ++pipelines;
    const auto inst = quote(a / (g.name + ".json"));
    const bool verified = shell(quote(binary) + " verify " + inst + " " + quote(a / (g.name + ".witness.json"))) == 0;
    const bool same = slurp(a / (g.name + ".json")) == slurp(b / (g.name + ".json")) &&
                      slurp(a / (g.name + ".witness.json")) == slurp(b / (g.name + ".witness.json"));
    if (!verified) note(g.name + ": witness does not verify");
    if (!same) note(g.name + ": generated files differ between runs");
    if (verified && same) ++ok;
  }
  for (const auto& name : names) {
    ++pipelines;
    const fs::path sol_a = a / (name + ".sol");
    const fs::path sol_b = b / (name + ".sol");
    const int solved_a = shell(quote(binary) + " solve " + quote(a / name) + " --no-timing -o " + quote(sol_a));
    const int solved_b = shell(quote(binary) + " solve " + quote(b / name) + " --no-timing -o " + quote(sol_b));
    if (solved_a != 0 || solved_b != 0) {
      note(name + ": solve exited " + std::to_string(solved_a));
      continue;
    }
    const bool verified = shell(quote(binary) + " verify " + quote(a / name) + " " + quote(sol_a)) == 0;
    const bool same = slurp(a / name) == slurp(b / name) && slurp(sol_a) == slurp(sol_b);
    if (!verified) note(name + ": solution does not verify");
    if (!same) note(name + ": outputs differ between runs");
    if (verified && same) ++ok;
  }
  std::string detail = count_line(ok, pipelines, "corpus files solve/verify with exit 0 and byte-identical reruns");
  for (const auto& p : problems) detail += "; " + p;
  return {ok == pipelines && failures_seen == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance QROUTE_BINARY WORK_DIR\n";
    return 2;
  }
  const std::string binary = argv[1];
  const fs::path work = argv[2];

  report("AC1", "oracle minimality", oracle_minimality);
  report("AC2", "fpt exactness", fpt_exactness);
  report("AC3", "disjoint-pairs optimality", disjoint_optimality);
  report("AC4", "distance formula", distance_formula);
  report("AC5", "linear arrangement sufficiency", ola_sufficiency, 10.0);
  report("AC6", "vertex cover equivalence", vertex_cover_equivalence);
  report("AC7", "verifier soundness", verifier_soundness);
  report("AC8", "bound sanity", bound_sanity);
  report("AC9", "cli pipeline", [&] { return cli_pipeline(binary, work); });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
