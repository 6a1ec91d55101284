// Copyright 2026 The famq Authors
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

// famq: command-line front end for graph atlases, experiment sweeps, circuit
// compilation and the built-in verification checks.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "famq/atomstack.hpp"
#include "famq/errors.hpp"
#include "famq/harness.hpp"

namespace {

using namespace famq;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in);
}

Eigen::VectorXd parse_csv(const std::string& text) {
  std::vector<double> values;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad parameter value '" + item + "'");
    }
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

int infer_rounds(const VariantChoice& v, int n, Eigen::Index count) {
  for (int p = 1; p <= 64; ++p) {
    if (parameter_count(v.spec(p, n)) == count) return p;
  }
  throw ConfigError("no round count matches " + std::to_string(count) + " parameters for " + v.label());
}

GridLayout parse_grid(const std::string& text, int n) {
  if (text.empty()) return GridLayout::near_square(n);
  int rows = 0, cols = 0;
  char x = 0;
  std::istringstream s(text);
  if (!(s >> rows >> x >> cols) || x != 'x') throw ConfigError("grid must look like 2x3");
  return GridLayout::row_major(n, rows, cols);
}

RunOptions progress_options(int threads, bool quiet) {
  RunOptions options;
  options.threads = threads;
  if (!quiet) {
    options.progress = [](std::size_t done, std::size_t total) {
      if (done == total || done % 50 == 0) std::fprintf(stderr, "\r%zu/%zu optimizations", done, total);
      if (done == total) std::fprintf(stderr, "\n");
    };
  }
  return options;
}

int run_sweep(const ExperimentConfig& config, const std::string& out, int threads, bool quiet) {
  const auto records = run_experiment(config, progress_options(threads, quiet));
  persist_run(out, config, records);
  if (!quiet) write_aggregate(std::cout, aggregate(records));
  return 0;
}

int run_verify(const std::string& which, std::uint64_t seed, const std::string& out) {
  std::string report;
  bool passed = false;
  if (which == "cancellation") {
    const auto r = verify_cancellation(seed);
    report = report_to_json(r);
    passed = r.passed;
  } else {
    const auto r = verify_exact_solvable(seed);
    report = report_to_json(r);
    passed = r.passed;
  }
  std::cout << report << '\n';
  if (!out.empty()) {
    std::ofstream f(out);
    f << report << '\n';
    if (!f) throw Error("cannot write " + out);
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"famq: free-axis-mixer QAOA simulation and experiment runner"};
  app.require_subcommand(1);

  int atlas_n = 5;
  auto* atlas = app.add_subcommand("atlas", "Print one connected graph per isomorphism class");
  atlas->add_option("n", atlas_n, "Number of nodes (2-6)")->required();

  std::string preset, config_path, out_dir;
  int threads = 0;
  bool quiet = false;
  std::uint64_t verify_seed = 1;
  auto* run = app.add_subcommand("run", "Run a named preset, optionally overriding fields from a JSON config");
  run->add_option("--preset", preset, "Preset name")->required();
  run->add_option("--config", config_path, "JSON file with overrides");
  run->add_option("--out", out_dir, "Output directory (or report file for verify presets)")->required();
  run->add_option("--threads", threads, "Worker threads (default FAMQ_THREADS or all cores)");
  run->add_option("--seed", verify_seed, "Seed for verify presets");
  run->add_flag("--quiet", quiet, "No progress or summary output");

  auto* sweep = app.add_subcommand("sweep", "Run a custom sweep described entirely by a JSON config");
  sweep->add_option("--config", config_path, "JSON config")->required();
  sweep->add_option("--out", out_dir, "Output directory")->required();
  sweep->add_option("--threads", threads, "Worker threads");
  sweep->add_flag("--quiet", quiet, "No progress or summary output");

  std::string graph_path, variant = "QAOA", params_text, grid, circuit_out;
  int rounds = 0;
  auto* compile_cmd = app.add_subcommand("compile", "Compile one ansatz instance to native gates");
  compile_cmd->add_option("--graph", graph_path, "Graph file")->required();
  compile_cmd->add_option("--variant", variant, "QAOA, 1-FAM, p-FAM, N-FAM, pN-FAM, with optional (scaled)");
  compile_cmd->add_option("--params", params_text, "Comma-separated parameters")->required();
  compile_cmd->add_option("--rounds", rounds, "Rounds p (inferred from the parameter count by default)");
  compile_cmd->add_option("--grid", grid, "Grid as ROWSxCOLS (default near-square)");
  compile_cmd->add_option("--out", circuit_out, "Circuit file (default stdout)");

  std::string circuit_path;
  double fidelity = 1.0;
  auto* simulate = app.add_subcommand("simulate", "Simulate a native circuit file");
  simulate->add_option("--circuit", circuit_path, "Circuit file")->required();
  simulate->add_option("--cz-fidelity", fidelity, "CZ fidelity; 1 disables all noise");
  simulate->add_option("--graph", graph_path, "Report AR and SP against this MAXCUT instance");

  std::string which;
  std::string report_out;
  auto* verify = app.add_subcommand("verify", "Run a built-in check; exit status 1 on failure");
  verify->add_option("check", which, "cancellation or exact")->required()->check(CLI::IsMember({"cancellation", "exact"}));
  verify->add_option("--seed", verify_seed, "Random seed");
  verify->add_option("--out", report_out, "Also write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*atlas) {
      write_graphs(std::cout, connected_atlas(atlas_n));
      return 0;
    }
    if (*run) {
      if (preset == "verify_cancellation" || preset == "verify_exact_solvable") {
        return run_verify(preset == "verify_cancellation" ? "cancellation" : "exact", verify_seed, out_dir);
      }
      ExperimentConfig config = preset_config(preset);
      if (!config_path.empty()) config = config_from_json(slurp(config_path), config);
      return run_sweep(config, out_dir, threads, quiet);
    }
    if (*sweep) {
      return run_sweep(config_from_json(slurp(config_path)), out_dir, threads, quiet);
    }
    if (*compile_cmd) {
      const Graph g = load_graph(graph_path);
      const VariantChoice v = VariantChoice::parse(variant);
      const Eigen::VectorXd params = parse_csv(params_text);
      const int p = rounds > 0 ? rounds : infer_rounds(v, g.n_nodes(), params.size());
      const NativeCircuit c = compile(v.spec(p, g.n_nodes()), params, g, parse_grid(grid, g.n_nodes()));
      if (circuit_out.empty()) {
        write_circuit(std::cout, c);
      } else {
        std::ofstream f(circuit_out);
        write_circuit(f, c);
        if (!f) throw Error("cannot write " + circuit_out);
      }
      std::cerr << c.gates.size() << " gates, " << c.cz_count() << " CZ, " << c.swap_count << " SWAP\n";
      return 0;
    }
    if (*simulate) {
      std::ifstream in(circuit_path);
      if (!in) throw Error("cannot open " + circuit_path);
      const NativeCircuit c = read_circuit(in);
      NoiseParams noise;
      noise.cz_fidelity = fidelity;
      const QuantumState state = simulate_noisy(c, noise);
      std::cout << std::setprecision(12);
      if (!graph_path.empty()) {
        const auto inst = maxcut_instance(load_graph(graph_path));
        std::cout << "cost " << expectation(state, inst.diagonal) << "\nAR " << approximation_ratio(state, inst)
                  << "\nSP " << success_probability(state, inst) << '\n';
      } else {
        const auto probs = probabilities(state);
        for (Eigen::Index z = 0; z < probs.size(); ++z) std::cout << z << ' ' << probs[z] << '\n';
      }
      return 0;
    }
    if (*verify) return run_verify(which, verify_seed, report_out);
  } catch (const std::exception& e) {
    std::cerr << "famq: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
