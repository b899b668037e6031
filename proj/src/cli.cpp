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

#include "qroute/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qroute/disjoint.hpp"
#include "qroute/fpt.hpp"
#include "qroute/io.hpp"
#include "qroute/oracle.hpp"
#include "qroute/reductions.hpp"

namespace qroute::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << text;
}

// Fisher-Yates with an explicit modulus so that output does not depend on the
// standard library's distribution implementation.
template <class T>
void shuffle(std::vector<T>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng() % i]);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    out.push_back(item.substr(first, item.find_last_not_of(' ') - first + 1));
  }
  return out;
}

struct SolveArgs {
  std::string input;
  std::string algo = "auto";
  std::size_t budget = 10'000'000;
  std::string output;
  bool expand = false;
  bool no_timing = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  Instance inst = io::parse_instance(read_file(args.input));
  if (inst.compressed()) {
    if (!args.expand) {
      err << "instance uses a compressed chain; pass --expand to materialize it\n";
      return kInputError;
    }
    inst = expand(inst);
  }
  const bool path = inst.graph.kind() == GraphKind::path;
  std::string algo = args.algo;
  if (algo == "auto") {
    if (path && has_disjoint_pairs(inst.gates)) {
      algo = "disjoint";
    } else if (path && inst.gates.size() <= 4) {
      algo = "fpt";
    } else {
      algo = "exact";
    }
  }
  const auto start = std::chrono::steady_clock::now();
  std::optional<Solution> solution;
  if (algo == "disjoint") {
    solution = solve_disjoint(inst);
  } else if (algo == "fpt") {
    solution = fpt::solve_fpt(inst, fpt::FptOptions{args.budget});
  } else if (algo == "exact") {
    solution = solve_exact(inst, ExactOptions{args.budget});
  } else {
    err << "unknown algorithm '" << algo << "'\n";
    return kInputError;
  }
  const double elapsed =
      args.no_timing ? 0.0
                     : std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (!solution) {
    err << "infeasible: no swap sequence realizes every gate\n";
    return kInfeasible;
  }
  emit(args.output, io::serialize_solution(inst, *solution, algo, elapsed), out);
  return kOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               std::ostream& out, std::ostream& err) {
  const Instance inst = io::parse_instance(read_file(instance_path));
  const io::SolutionFile sol = io::parse_solution(read_file(solution_path), inst.graph);
  if (inst.compressed()) {
    // Streamed: lines appear as gates are realized.
    const bool ok = verify_streaming(
        inst, sol.swaps, [&](std::uint64_t occurrence, std::size_t gate, std::size_t step) {
          out << io::schedule_name(inst, gate, occurrence) << ' ' << step << '\n';
        });
    if (!ok) {
      out << "infeasible\n";
      err << "swap sequence does not realize every gate\n";
      return kInfeasible;
    }
    out << "feasible length " << sol.swaps.size() << '\n';
    return kOk;
  }
  const auto schedule = verify(inst, sol.swaps);
  if (!schedule) {
    out << "infeasible\n";
    err << "swap sequence does not realize every gate\n";
    return kInfeasible;
  }
  for (std::size_t s = 0; s < inst.gates.size(); ++s) {
    out << inst.gates[s].id << ' ' << schedule->step[s] << '\n';
  }
  out << "feasible length " << sol.swaps.size() << '\n';
  return kOk;
}

struct GenArgs {
  std::string edges;
  std::string vertices;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string witness;
  bool expand = false;
};

int cmd_gen_ola(const GenArgs& args, std::ostream& out, std::ostream& err) {
  const auto extra = split_list(args.vertices);
  const auto h = reductions::parse_edge_list(args.edges, extra);
  reductions::OlaOptions options;
  const auto params = reductions::ola_params(h, args.k);
  if (args.seed) {
    std::vector<Token> at(h.vertices.size() * params.alpha);
    for (std::size_t i = 0; i < at.size(); ++i) at[i] = static_cast<Token>(i);
    shuffle(at, *args.seed);
    options.initial = TokenPlacement(std::move(at));
  }
  auto ola = reductions::gen_ola(h, args.k, options);
  std::ostream& report = (args.output.empty() || args.output == "-") ? err : out;
  const auto& p = ola.params;
  report << "n=" << p.n << " m=" << p.m << " k=" << p.k << " alpha=" << p.alpha
         << " beta=" << p.beta << " gamma=" << p.gamma << " |Q|=" << p.block_pattern_length
         << " |R|=" << p.round_length << " |S|=" << p.chain_length << '\n';

  const Instance written = args.expand ? expand(ola.instance) : ola.instance;
  emit(args.output, io::serialize_instance(written), out);

  if (!args.witness.empty()) {
    std::vector<std::size_t> identity(h.vertices.size());
    for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = v + 1;
    auto witness = reductions::ola_witness(h, args.k, identity, ola.instance.initial);
    Solution solution{std::move(witness.swaps), {}};
    verify_streaming(written, solution.swaps,
                     [&](std::uint64_t, std::size_t, std::size_t step) {
                       solution.schedule.step.push_back(step);
                     });
    std::ofstream file(args.witness, std::ios::binary);
    if (!file) throw InvalidInput("cannot write '" + args.witness + "'");
    file << io::serialize_solution(written, solution, "ola-witness", 0.0);
  }
  return kOk;
}

int cmd_gen_vc(const GenArgs& args, std::ostream& out) {
  const auto extra = split_list(args.vertices);
  const auto h = reductions::parse_edge_list(args.edges, extra);
  std::optional<std::vector<std::string>> leaves;
  if (args.seed) {
    leaves = h.vertices;
    shuffle(*leaves, *args.seed);
  }
  emit(args.output, io::serialize_instance(reductions::gen_vc(h, leaves)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit routing on paths and stars: exact, parameterized and disjoint-pair solvers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a minimum-length feasible swap sequence");
  solve_cmd->add_option("input", solve.input, "Instance file")->required();
  solve_cmd->add_option("--algo", solve.algo, "exact | fpt | disjoint | auto")
      ->check(CLI::IsMember({"auto", "exact", "fpt", "disjoint"}));
  solve_cmd->add_option("--budget", solve.budget, "Search state budget");
  solve_cmd->add_option("-o,--output", solve.output, "Solution file (default stdout)");
  solve_cmd->add_flag("--expand", solve.expand, "Materialize compressed chains");
  solve_cmd->add_flag("--no-timing", solve.no_timing, "Write elapsed_ms as 0");

  std::string verify_instance;
  std::string verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution and print its schedule");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_solution, "Solution file")->required();

  GenArgs gen;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate reduction instances");
  gen_cmd->require_subcommand(1);
  auto* ola_cmd = gen_cmd->add_subcommand("ola", "Linear arrangement -> path/chain instance");
  auto* vc_cmd = gen_cmd->add_subcommand("vc", "Vertex cover -> star/antichain instance");
  for (auto* cmd : {ola_cmd, vc_cmd}) {
    cmd->add_option("--edges", gen.edges, "Edge list, e.g. \"1-2,2-3\"")->required();
    cmd->add_option("--vertices", gen.vertices, "Additional (isolated) vertices, comma separated");
    cmd->add_option("--seed", seed, "Scramble the initial placement with this seed");
    cmd->add_option("-o,--output", gen.output, "Instance file (default stdout)");
  }
  ola_cmd->add_option("--k", gen.k, "Arrangement cost bound")->required();
  ola_cmd->add_option("--witness", gen.witness, "Also write the sufficiency witness solution");
  ola_cmd->add_flag("--expand", gen.expand, "Write the chain uncompressed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  for (auto* cmd : {ola_cmd, vc_cmd}) {
    if (cmd->count("--seed") > 0) gen.seed = seed;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*verify_cmd) return cmd_verify(verify_instance, verify_solution, out, err);
    if (*ola_cmd) return cmd_gen_ola(gen, out, err);
    if (*vc_cmd) return cmd_gen_vc(gen, out);
  } catch (const BudgetExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace qroute::cli
