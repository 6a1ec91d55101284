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

// Coherent Z-phase error models and their analytic cancellation.

#include <Eigen/Dense>

#include <cstdint>
#include <string_view>
#include <vector>

#include "famq/ansatz.hpp"

namespace famq {

enum class ZPhaseKind { zero, fixed, qubit_dep, gamma_dep, gamma_qubit_dep };

std::string_view to_string(ZPhaseKind kind);
ZPhaseKind parse_zphase_kind(std::string_view name);

/// φ_n^k per model:
///   zero             0
///   fixed            φ
///   qubit_dep        φ_n
///   gamma_dep        γ_k φ
///   gamma_qubit_dep  γ_k φ_n
struct ZPhaseModel {
  ZPhaseKind kind = ZPhaseKind::zero;
  double phi = 0;              // fixed, gamma_dep
  Eigen::VectorXd phi_vector;  // qubit_dep, gamma_qubit_dep

  static ZPhaseModel zero() { return {}; }
  static ZPhaseModel fixed(double phi) { return {ZPhaseKind::fixed, phi, {}}; }
  static ZPhaseModel qubit_dependent(Eigen::VectorXd phis) { return {ZPhaseKind::qubit_dep, 0, std::move(phis)}; }
  static ZPhaseModel gamma_dependent(double phi) { return {ZPhaseKind::gamma_dep, phi, {}}; }
  static ZPhaseModel gamma_qubit_dependent(Eigen::VectorXd phis) {
    return {ZPhaseKind::gamma_qubit_dep, 0, std::move(phis)};
  }

  bool uses_vector() const { return kind == ZPhaseKind::qubit_dep || kind == ZPhaseKind::gamma_qubit_dep; }
  void validate(int n_qubits) const;
};

/// φ^k, length n_qubits.
Eigen::VectorXd phase_vector(const ZPhaseModel& model, int round_k, double gamma_k, int n_qubits);

/// Injector applying exp(-i Σ φ_n^k Z_n) after each problem unitary.
PhaseInjector inject(const ZPhaseModel& model, int n_qubits);

/// Axis angles that undo a sequence of per-round Z-phase errors.
struct CancellationPlan {
  std::vector<Eigen::VectorXd> accumulated;   // Σ_{j≤k} φ^j
  std::vector<Eigen::VectorXd> theta_rounds;  // −2 Σ_{j≤k} φ^j
};

/// With mixer exp(-iβ Σ(cosθ X − sinθ Y)) = e^{i(θ/2)·Z} e^{-iβH_X} e^{-i(θ/2)·Z},
/// round-k error e^{-iφ^k·Z} is absorbed when θ^k/2 = −Σ_{j≤k} φ^j.
CancellationPlan cancellation_plan(const std::vector<Eigen::VectorXd>& phi_per_round);

/// Uniform draws on [0, max_phi] for the qubit-dependent models.
Eigen::VectorXd random_phase_vector(int n_qubits, double max_phi, std::uint64_t seed);

}  // namespace famq
