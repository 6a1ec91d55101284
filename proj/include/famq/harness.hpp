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

#pragma once

// Experiment sweeps, metrics, aggregation and result files.
//
// A sweep enumerates every (graph, variant, p, error setting, error instance,
// call budget, CZ fidelity) cell and runs `cold_starts` optimizations in each.
// One RunRecord is produced per optimization. Records come back in enumeration
// order regardless of the thread count.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "famq/ansatz.hpp"
#include "famq/atomstack.hpp"
#include "famq/optim.hpp"
#include "famq/problems.hpp"
#include "famq/zphase.hpp"

namespace famq {

/// ⟨H⟩ / c_min. Throws MetricError unless c_min < 0.
double approximation_ratio(const QuantumState& state, const ProblemInstance& instance);

/// Weight of the state on the ground set.
double success_probability(const QuantumState& state, const ProblemInstance& instance);

struct VariantChoice {
  Variant variant = Variant::qaoa;
  bool scaled = false;

  AnsatzSpec spec(int rounds, int n_qubits) const { return {variant, rounds, n_qubits, scaled}; }
  std::string label() const;
  static VariantChoice parse(std::string_view label);  // "N-FAM(scaled)", "QAOA", ...
};

struct ErrorSetting {
  ZPhaseKind kind = ZPhaseKind::zero;
  double phi = 0;                          // fixed, gamma_dep
  int instances = 1;                       // vectors drawn for qubit_dep, gamma_qubit_dep
  double max_phi = 0.2 * std::numbers::pi;  // entries drawn from [0, max_phi]

  std::string label() const;
};

enum class Backend { agnostic, atom };
enum class XAxis { parameters, rounds, qubits, calls, phi, cz_fidelity };

std::string_view to_string(Backend b);
std::string_view to_string(XAxis x);

struct ExperimentConfig {
  std::string preset = "custom";
  std::vector<VariantChoice> variants;
  std::vector<int> rounds{2};
  std::vector<int> n_qubits{5};
  int sampled_graphs = 100;  // graphs drawn for N > 6
  int max_graphs = 0;        // keep only the first k graphs per N; 0 keeps all
  std::vector<ErrorSetting> errors{ErrorSetting{}};
  Backend backend = Backend::agnostic;
  NoiseParams noise;
  std::vector<double> cz_fidelities{1.0};
  std::vector<int> max_calls{5001};  // per-optimization call budgets; overrides optimizer.budget.max_calls
  OptimizerConfig optimizer;
  int cold_starts = 3;
  std::uint64_t master_seed = 2022;
  XAxis x_axis = XAxis::parameters;

  void validate() const;
};

std::vector<std::string> preset_names();
/// Defaults for a named sweep; the verify_* names are not sweeps and throw.
ExperimentConfig preset_config(std::string_view name);

std::string config_to_json(const ExperimentConfig& config);
/// Applies the keys present in `json_text` on top of `base`.
ExperimentConfig config_from_json(std::string_view json_text, ExperimentConfig base = {});

struct RunRecord {
  std::string graph_id;
  int n_qubits = 0;
  std::string variant;
  int rounds = 0;
  int repetition = 0;
  std::string error_model;
  int error_instance = 0;
  Eigen::VectorXd phi;  // per-qubit error magnitudes, empty for scalar models
  double cz_fidelity = 1;
  int max_calls = 0;
  std::string series;
  double x_value = 0;
  Eigen::VectorXd params;
  double cost = 0;
  double approximation_ratio = 0;
  double success_probability = 0;
  int calls_used = 0;
  int calls_counted = 0;  // seen by the harness's own counter
  std::uint64_t seed = 0;
};

struct AggregateRow {
  std::string series;
  double x_value = 0;
  std::string metric;  // "AR" or "SP"
  double best_mean = 0;
  double best_std = 0;
  double avg_mean = 0;
  double avg_std = 0;
  int n_graphs = 0;
};

struct RunOptions {
  int threads = 0;  // 0: FAMQ_THREADS, else hardware concurrency
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// FAMQ_THREADS if set to a positive integer, else the hardware concurrency.
int default_thread_count();

std::vector<RunRecord> run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Best-of-repetitions per (graph, error instance) then averaged over
/// instances; likewise the repetition mean. Both are summarized across graphs
/// (population standard deviation).
std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records);

void write_records(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records(std::istream& in);
void write_aggregate(std::ostream& out, const std::vector<AggregateRow>& rows);

/// Writes config.json, records.jsonl and aggregate.csv into `directory`.
void persist_run(const std::string& directory, const ExperimentConfig& config, const std::vector<RunRecord>& records);

struct CancellationReport {
  int trials = 0;
  double max_deviation = 0;          // corrected circuits vs error-free QAOA
  double min_control_deviation = 0;  // perturbed θ
  bool passed = false;
};

struct ExactReport {
  int instances = 0;
  int rejected_degenerate = 0;
  double min_certificate_sp = 1;
  double max_qaoa_sp = 0;  // best fine-grid QAOA SP over the non-uniform draws
  double uniform_certificate_sp = 0;
  double uniform_qaoa_sp = 0;
  bool passed = false;
};

CancellationReport verify_cancellation(std::uint64_t seed, int trials = 50);
ExactReport verify_exact_solvable(std::uint64_t seed, int instances = 20);

/// Maximum single-round QAOA success probability over the grid
/// γ = iπ/steps (i < 2·steps), β = jπ/steps (j < steps).
double qaoa_grid_max_sp(const DiagonalObservable& diagonal, Eigen::Index target, int steps = 1000);

std::string report_to_json(const CancellationReport& report);
std::string report_to_json(const ExactReport& report);

}  // namespace famq
