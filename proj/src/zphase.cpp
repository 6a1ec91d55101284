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

#include "famq/zphase.hpp"

#include <random>
#include <string>

namespace famq {

std::string_view to_string(ZPhaseKind kind) {
  switch (kind) {
    case ZPhaseKind::zero: return "zero";
    case ZPhaseKind::fixed: return "fixed";
    case ZPhaseKind::qubit_dep: return "qubit_dep";
    case ZPhaseKind::gamma_dep: return "gamma_dep";
    case ZPhaseKind::gamma_qubit_dep: return "gamma_qubit_dep";
  }
  return "?";
}

ZPhaseKind parse_zphase_kind(std::string_view name) {
  for (auto k : {ZPhaseKind::zero, ZPhaseKind::fixed, ZPhaseKind::qubit_dep, ZPhaseKind::gamma_dep,
                 ZPhaseKind::gamma_qubit_dep}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown Z-phase model '" + std::string(name) + "'");
}

void ZPhaseModel::validate(int n_qubits) const {
  if (uses_vector()) {
    if (phi_vector.size() != n_qubits) throw DimensionError("phase vector length must equal N");
  } else if (phi_vector.size() != 0) {
    throw ConfigError("scalar Z-phase model carries a phase vector");
  }
}

Eigen::VectorXd phase_vector(const ZPhaseModel& model, int /*round_k*/, double gamma_k, int n_qubits) {
  model.validate(n_qubits);
  switch (model.kind) {
    case ZPhaseKind::zero: return Eigen::VectorXd::Zero(n_qubits);
    case ZPhaseKind::fixed: return Eigen::VectorXd::Constant(n_qubits, model.phi);
    case ZPhaseKind::qubit_dep: return model.phi_vector;
    case ZPhaseKind::gamma_dep: return Eigen::VectorXd::Constant(n_qubits, gamma_k * model.phi);
    case ZPhaseKind::gamma_qubit_dep: return gamma_k * model.phi_vector;
  }
  return Eigen::VectorXd::Zero(n_qubits);
}

PhaseInjector inject(const ZPhaseModel& model, int n_qubits) {
  model.validate(n_qubits);
  return [model, n_qubits](int round_k, double gamma_k) {
    return phase_vector(model, round_k, gamma_k, n_qubits);
  };
}

CancellationPlan cancellation_plan(const std::vector<Eigen::VectorXd>& phi_per_round) {
  CancellationPlan plan;
  if (phi_per_round.empty()) return plan;
  const Eigen::Index n = phi_per_round.front().size();
  Eigen::VectorXd running = Eigen::VectorXd::Zero(n);
  for (const auto& phi : phi_per_round) {
    if (phi.size() != n) throw DimensionError("ragged phase vectors");
    running += phi;
    plan.accumulated.push_back(running);
    plan.theta_rounds.push_back(-2.0 * running);
  }
  return plan;
}

Eigen::VectorXd random_phase_vector(int n_qubits, double max_phi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, max_phi);
  Eigen::VectorXd out(n_qubits);
  for (auto& x : out) x = u(rng);
  return out;
}

}  // namespace famq
