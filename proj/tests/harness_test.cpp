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

#include "famq/harness.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "famq/errors.hpp"

namespace famq {
namespace {

using std::numbers::pi;

ProblemInstance k3() { return maxcut_instance(Graph(3, {{0, 1}, {0, 2}, {1, 2}})); }

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.variants = {VariantChoice::parse("QAOA"), VariantChoice::parse("N-FAM(scaled)")};
  c.rounds = {1};
  c.n_qubits = {3};
  c.optimizer.kind = OptimizerKind::particle_swarm;
  c.max_calls = {120};
  c.cold_starts = 2;
  c.master_seed = 5;
  return c;
}

TEST(Metrics, ApproximationRatio) {
  const auto inst = k3();
  EXPECT_NEAR(approximation_ratio(basis_state(3, inst.ground_set.front()), inst), 1.0, 1e-15);
  // Uniform superposition: every edge is cut half the time.
  for (const auto& g : connected_atlas(4)) {
    const auto i4 = maxcut_instance(g);
    double brute_min = 0;
    for (int z = 0; z < 16; ++z) {
      int cut = 0;
      for (const auto& [u, v] : g.edges()) cut += ((z >> u) & 1) != ((z >> v) & 1);
      brute_min = std::min(brute_min, -static_cast<double>(cut));
    }
    EXPECT_NEAR(approximation_ratio(plus_state(4), i4), (-0.5 * g.n_edges()) / brute_min, 1e-12);
  }
  VectorXc half = VectorXc::Zero(8);
  half[0] = half[1] = 1 / std::sqrt(2.0);
  EXPECT_NEAR(approximation_ratio(QuantumState::pure(3, half), inst), 0.5, 1e-12);
  EXPECT_THROW(approximation_ratio(plus_state(2), maxcut_instance(Graph(2))), MetricError);
}

TEST(Metrics, SuccessProbability) {
  const auto inst = k3();
  EXPECT_NEAR(success_probability(basis_state(3, inst.ground_set.back()), inst), 1.0, 1e-15);
  EXPECT_NEAR(success_probability(plus_state(3), inst), 0.75, 1e-12);
  EXPECT_EQ(success_probability(basis_state(3, 0), inst), 0.0);
}

TEST(Config, VariantLabels) {
  for (const char* label : {"QAOA", "1-FAM", "1-FAM(scaled)", "p-FAM", "N-FAM", "N-FAM(scaled)", "pN-FAM"}) {
    EXPECT_EQ(VariantChoice::parse(label).label(), label);
  }
  EXPECT_THROW(VariantChoice::parse("pN-FAM(scaled)"), ConfigError);
  EXPECT_THROW(VariantChoice::parse("X-FAM"), ConfigError);
}

TEST(Config, PresetShapes) {
  const auto fig1 = preset_config("fig1");
  EXPECT_EQ(fig1.errors.size(), 5u);
  EXPECT_EQ(fig1.variants.size(), 5u);
  EXPECT_EQ(fig1.rounds, std::vector<int>{2});
  EXPECT_EQ(fig1.n_qubits, std::vector<int>{5});
  EXPECT_EQ(fig1.cold_starts, 3);
  EXPECT_EQ(fig1.optimizer.kind, OptimizerKind::particle_swarm);
  EXPECT_EQ(fig1.max_calls, std::vector<int>{5001});
  EXPECT_EQ(fig1.optimizer.budget.max_iterations, 1000);
  EXPECT_EQ(preset_config("fig2").rounds, (std::vector<int>{1, 2, 3, 4, 5}));
  const auto fig3 = preset_config("fig3");
  EXPECT_EQ(fig3.n_qubits, (std::vector<int>{3, 4, 5, 6, 7}));
  EXPECT_EQ(fig3.cold_starts, 10);
  EXPECT_EQ(fig3.optimizer.kind, OptimizerKind::bfgs);
  const auto fig4 = preset_config("fig4_atom");
  EXPECT_EQ(fig4.backend, Backend::atom);
  EXPECT_EQ(fig4.max_calls, std::vector<int>{1500});
  EXPECT_EQ(fig4.optimizer.kind, OptimizerKind::nelder_mead);
  const auto s3 = preset_config("figS3_phi");
  EXPECT_EQ(s3.errors.size(), 10u);
  EXPECT_NEAR(s3.errors[4].phi, 0.2 * pi, 1e-15);
  EXPECT_EQ(preset_config("figS1_calls").max_calls, (std::vector<int>{500, 1000, 2000, 5001, 8000}));
  for (const auto& name : preset_names()) {
    if (name.starts_with("verify")) {
      EXPECT_THROW(preset_config(name), ConfigError);
    } else {
      EXPECT_NO_THROW(preset_config(name).validate()) << name;
    }
  }
  EXPECT_THROW(preset_config("fig9"), ConfigError);
}

TEST(Config, JsonRoundTrip) {
  for (const auto& name : {"fig1", "fig4_atom", "figS3_phi"}) {
    const auto c = preset_config(name);
    const auto back = config_from_json(config_to_json(c));
    EXPECT_EQ(config_to_json(back), config_to_json(c));
  }
  const auto c = config_from_json(R"({"rounds": [3], "variants": ["pN-FAM"], "optimizer": {"kind": "bfgs"},
                                      "errors": [{"kind": "fixed", "phi": 0.3}], "max_graphs": 2})",
                                  preset_config("fig2"));
  EXPECT_EQ(c.rounds, std::vector<int>{3});
  EXPECT_EQ(c.variants.size(), 1u);
  EXPECT_EQ(c.optimizer.kind, OptimizerKind::bfgs);
  EXPECT_EQ(c.errors.front().phi, 0.3);
  EXPECT_EQ(c.max_graphs, 2);
  EXPECT_EQ(c.cold_starts, 3);
}

TEST(Config, RejectsInconsistentInput) {
  EXPECT_THROW(config_from_json(R"({"colds": 3})", preset_config("fig2")), ConfigError);
  EXPECT_THROW(config_from_json(R"({"errors": [{"kind": "fixed", "phi": 0.1}]})", preset_config("fig4_atom")),
               ConfigError);
  EXPECT_THROW(config_from_json(R"({"cz_fidelities": [0.9]})", preset_config("fig2")), ConfigError);
  EXPECT_THROW(config_from_json(R"({"cold_starts": 0})", preset_config("fig2")), ConfigError);
  EXPECT_THROW(config_from_json(R"({"rounds": "two"})", preset_config("fig2")), ConfigError);
  EXPECT_THROW(config_from_json("not json", preset_config("fig2")), ConfigError);
}

TEST(Run, RecordsAreCompleteAndBounded) {
  const auto c = small_config();
  const auto records = run_experiment(c, {1, {}});
  ASSERT_EQ(records.size(), 2u * 2u * 2u);  // graphs x variants x repetitions
  for (const auto& r : records) {
    EXPECT_GE(r.approximation_ratio, -1e-9);
    EXPECT_LE(r.approximation_ratio, 1 + 1e-9);
    EXPECT_GE(r.success_probability, -1e-9);
    EXPECT_LE(r.success_probability, 1 + 1e-9);
    EXPECT_EQ(r.calls_counted, r.calls_used);
    EXPECT_LE(r.calls_counted, 120);
    EXPECT_EQ(r.max_calls, 120);
    EXPECT_EQ(r.n_qubits, 3);
    EXPECT_EQ(r.series, r.variant + " p=1");
    EXPECT_EQ(r.x_value, r.variant == "QAOA" ? 2 : 5);
  }
  EXPECT_EQ(records[0].graph_id, "n3/000");
  EXPECT_EQ(records[0].variant, "QAOA");
  EXPECT_EQ(records[2].variant, "N-FAM(scaled)");
}

TEST(Run, CostIsReproducibleFromRecord) {
  const auto c = small_config();
  const auto records = run_experiment(c, {1, {}});
  const auto atlas = connected_atlas(3);
  for (const auto& r : records) {
    const int g = std::stoi(r.graph_id.substr(3));
    const auto inst = maxcut_instance(atlas[g]);
    const AnsatzSpec spec = VariantChoice::parse(r.variant).spec(r.rounds, r.n_qubits);
    EXPECT_NEAR(cost(spec, r.params, inst.diagonal), r.cost, 1e-12);
    EXPECT_NEAR(r.cost / inst.c_min, r.approximation_ratio, 1e-12);
  }
}

TEST(Run, ThreadCountDoesNotChangeResults) {
  auto c = small_config();
  c.errors = {ErrorSetting{ZPhaseKind::qubit_dep, 0, 2}};
  const auto a = run_experiment(c, {1, {}});
  const auto b = run_experiment(c, {3, {}});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].cost, b[i].cost);
    EXPECT_EQ(a[i].params, b[i].params);
    EXPECT_EQ(a[i].seed, b[i].seed);
  }
}

TEST(Run, ErrorInstancesAreSharedAcrossGraphs) {
  auto c = small_config();
  c.errors = {ErrorSetting{ZPhaseKind::gamma_qubit_dep, 0, 3}};
  c.cold_starts = 1;
  const auto records = run_experiment(c, {1, {}});
  ASSERT_EQ(records.size(), 2u * 2u * 3u);
  std::set<std::vector<double>> distinct;
  for (const auto& r : records) {
    ASSERT_EQ(r.phi.size(), 3);
    EXPECT_TRUE((r.phi.array() >= 0).all() && (r.phi.array() <= 0.2 * pi).all());
    distinct.insert(std::vector<double>(r.phi.data(), r.phi.data() + 3));
  }
  EXPECT_EQ(distinct.size(), 3u);
}

TEST(Run, AtomBackendReusesStartsAcrossFidelities) {
  ExperimentConfig c;
  c.variants = {VariantChoice::parse("N-FAM(scaled)")};
  c.rounds = {1};
  c.n_qubits = {3};
  c.max_graphs = 1;
  c.backend = Backend::atom;
  c.cz_fidelities = {0.95, 1.0};
  c.optimizer.kind = OptimizerKind::nelder_mead;
  c.max_calls = {25};
  c.cold_starts = 2;
  c.x_axis = XAxis::cz_fidelity;
  const auto records = run_experiment(c, {1, {}});
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].seed, records[2].seed);
  EXPECT_EQ(records[1].seed, records[3].seed);
  EXPECT_NE(records[0].seed, records[1].seed);
  EXPECT_EQ(records[0].x_value, 0.95);
  EXPECT_EQ(records[2].x_value, 1.0);
  for (const auto& r : records) EXPECT_LE(r.calls_counted, 25);
}

TEST(Aggregate, BestThenMeanPerInstance) {
  auto rec = [](std::string g, int inst, double ar, double sp) {
    RunRecord r;
    r.series = "S";
    r.x_value = 1;
    r.graph_id = std::move(g);
    r.error_instance = inst;
    r.approximation_ratio = ar;
    r.success_probability = sp;
    return r;
  };
  // graph a: instance 0 reps (0.5, 0.9), instance 1 reps (0.7, 0.6); graph b: one instance (0.8, 0.4)
  const std::vector<RunRecord> records = {rec("a", 0, 0.5, 0.1), rec("a", 0, 0.9, 0.3), rec("a", 1, 0.7, 0.2),
                                          rec("a", 1, 0.6, 0.0), rec("b", 0, 0.8, 1.0), rec("b", 0, 0.4, 0.0)};
  const auto rows = aggregate(records);
  ASSERT_EQ(rows.size(), 2u);
  const auto& ar = rows[0];
  EXPECT_EQ(ar.metric, "AR");
  EXPECT_EQ(ar.n_graphs, 2);
  const double best_a = (0.9 + 0.7) / 2, best_b = 0.8;
  EXPECT_NEAR(ar.best_mean, (best_a + best_b) / 2, 1e-15);
  EXPECT_NEAR(ar.best_std, std::abs(best_a - best_b) / 2, 1e-15);
  const double avg_a = (0.7 + 0.65) / 2, avg_b = 0.6;
  EXPECT_NEAR(ar.avg_mean, (avg_a + avg_b) / 2, 1e-15);
  EXPECT_NEAR(ar.avg_std, std::abs(avg_a - avg_b) / 2, 1e-15);
  EXPECT_EQ(rows[1].metric, "SP");
  EXPECT_NEAR(rows[1].best_mean, ((0.3 + 0.2) / 2 + 1.0) / 2, 1e-15);
}

TEST(Aggregate, RecomputesFromPersistedRecords) {
  const auto c = small_config();
  const auto records = run_experiment(c, {1, {}});
  const auto dir = std::filesystem::temp_directory_path() / "famq_harness_test";
  std::filesystem::remove_all(dir);
  persist_run(dir.string(), c, records);
  std::ifstream in(dir / "records.jsonl");
  const auto back = read_records(in);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].cost, records[i].cost);
    EXPECT_EQ(back[i].params, records[i].params);
    EXPECT_EQ(back[i].seed, records[i].seed);
    EXPECT_EQ(back[i].series, records[i].series);
  }
  std::ostringstream a, b;
  write_aggregate(a, aggregate(records));
  write_aggregate(b, aggregate(back));
  EXPECT_EQ(a.str(), b.str());
  std::ifstream csv(dir / "aggregate.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "variant,x_value,metric,best_mean,best_std,avg_mean,avg_std,n_graphs");
  std::ifstream cfg(dir / "config.json");
  std::stringstream text;
  text << cfg.rdbuf();
  EXPECT_EQ(config_to_json(config_from_json(text.str())), config_to_json(c));
  std::filesystem::remove_all(dir);
}

TEST(Threads, EnvironmentOverride) {
  setenv("FAMQ_THREADS", "3", 1);
  EXPECT_EQ(default_thread_count(), 3);
  setenv("FAMQ_THREADS", "zero", 1);
  EXPECT_GE(default_thread_count(), 1);
  unsetenv("FAMQ_THREADS");
}

TEST(Verify, GridSearchMatchesDirectSimulation) {
  std::mt19937_64 rng(9);
  ExactSolvableSpec spec;
  spec.alphas = Eigen::Vector3d(0.3, -0.8, 0.55);
  spec.gamma = 1.1;
  spec.manybody_terms = {{{0, 2}, -1}};
  spec.m = 1;
  const auto inst = exact_instance(spec);
  const int steps = 24;
  double brute = 0;
  const AnsatzSpec qaoa{Variant::qaoa, 1, 3};
  for (int i = 0; i < 2 * steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const auto psi = evolve(qaoa, Eigen::Vector2d(pi * i / steps, pi * j / steps), inst.diagonal);
      brute = std::max(brute, std::norm(psi.amplitudes()[inst.certificate.target]));
    }
  }
  EXPECT_NEAR(qaoa_grid_max_sp(inst.diagonal, inst.certificate.target, steps), brute, 1e-12);
}

TEST(Verify, CancellationReport) {
  const auto r = verify_cancellation(4, 20);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.max_deviation, 1e-10);
  EXPECT_GT(r.min_control_deviation, 1e-3);
  EXPECT_NE(report_to_json(r).find("\"passed\": true"), std::string::npos);
}

TEST(Verify, ExactSolvableReport) {
  const auto r = verify_exact_solvable(4, 5);
  EXPECT_EQ(r.instances, 5);
  EXPECT_GE(r.min_certificate_sp, 1 - 1e-8);
  EXPECT_GE(r.uniform_certificate_sp, 1 - 1e-8);
  EXPECT_GE(r.uniform_qaoa_sp, 1 - 1e-8);
  EXPECT_LT(r.max_qaoa_sp, 1 - 1e-3);
}

}  // namespace
}  // namespace famq
