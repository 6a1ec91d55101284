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

// Budgeted minimizers: particle swarm, adaptive Nelder-Mead, and BFGS with
// central finite differences, plus cold-start orchestration.
//
// Every call to the cost function goes through a counting wrapper; once
// max_calls evaluations have been spent the optimizer stops and reports the
// best point seen.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "famq/ansatz.hpp"

namespace famq {

using CostFunction = std::function<double(const Eigen::VectorXd&)>;

struct Budget {
  int max_calls = 5001;
  int max_iterations = 1000;

  void validate() const;
};

struct TracePoint {
  int call = 0;  // 1-based
  double best = 0;
};

struct OptResult {
  Eigen::VectorXd best_params;
  double best_cost = 0;
  int calls_used = 0;
  int iterations = 0;
  std::vector<TracePoint> trace;  // one point per improvement
};

struct PsoOptions {
  int swarm_size = 20;
  double cognitive = 2.0;
  double social = 2.0;
  double inertia_start = 0.9;
  double inertia_end = 0.4;
  double velocity_clamp = 0.5;  // fraction of the box width
};

struct NelderMeadOptions {
  double initial_step = 0.1;
  double x_tolerance = 1e-10;
  double f_tolerance = 1e-14;
};

struct BfgsOptions {
  double fd_step = 1e-6;
  double gradient_tolerance = 1e-8;
};

OptResult particle_swarm(const CostFunction& cost, const Bounds& bounds, const Budget& budget, std::uint64_t seed,
                         const PsoOptions& options = {});

OptResult nelder_mead(const CostFunction& cost, const Eigen::VectorXd& x0, const Budget& budget,
                      const NelderMeadOptions& options = {});

OptResult bfgs(const CostFunction& cost, const Eigen::VectorXd& x0, const Budget& budget,
               const BfgsOptions& options = {});

/// Central differences, 2·dim evaluations.
Eigen::VectorXd finite_difference_gradient(const CostFunction& cost, const Eigen::VectorXd& x, double step);

enum class OptimizerKind { particle_swarm, nelder_mead, bfgs };

std::string_view to_string(OptimizerKind kind);
OptimizerKind parse_optimizer(std::string_view name);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::particle_swarm;
  Budget budget;
  PsoOptions pso;
  NelderMeadOptions nelder_mead;
  BfgsOptions bfgs;
};

struct ColdStartPlan {
  int repetitions = 1;
  std::uint64_t seed = 0;
  Bounds bounds;
};

struct ColdStartResult {
  OptResult best;
  std::vector<OptResult> all;
};

/// Independent stream seed for repetition `index`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform point in the box, drawn from `seed`.
Eigen::VectorXd uniform_start(const Bounds& bounds, std::uint64_t seed);

/// One optimization from repetition `rep` of the plan; the starting point (or
/// swarm) depends only on (plan.seed, rep).
OptResult run_repetition(const OptimizerConfig& config, const ColdStartPlan& plan, int rep,
                         const CostFunction& cost);

ColdStartResult run_cold_starts(const OptimizerConfig& config, const ColdStartPlan& plan, const CostFunction& cost);

}  // namespace famq
