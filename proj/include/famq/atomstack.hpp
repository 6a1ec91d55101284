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

// Neutral-atom back end: native gates, grid placement with SWAP routing, and
// density-matrix simulation under gate-dependent noise.
//
// Native gates act on atoms. Atom i starts out holding logical qubit i; routing
// SWAPs move logical qubits between atoms and `final_map` records where each
// one ends up. Both simulators return states in logical qubit order.

#include <Eigen/Dense>

#include <iosfwd>
#include <numbers>
#include <utility>
#include <variant>
#include <vector>

#include "famq/ansatz.hpp"
#include "famq/channels.hpp"
#include "famq/problems.hpp"
#include "famq/simcore.hpp"

namespace famq {

/// exp(-i angle Z / 2) on one atom.
struct LocalRz {
  int qubit = 0;
  double angle = 0;
};

/// exp(-i rotation/2 (cos axis X + sin axis Y)) on every atom.
struct GlobalXY {
  double axis = 0;
  double rotation = 0;
};

struct CZ {
  int a = 0;
  int b = 1;
};

using NativeGate = std::variant<LocalRz, GlobalXY, CZ>;

struct GridLayout {
  int rows = 1;
  int cols = 1;
  std::vector<std::pair<int, int>> placement;  // atom -> (row, col)

  /// First n sites in row-major order.
  static GridLayout row_major(int n_qubits, int rows, int cols);
  /// cols = ceil(sqrt n), rows = ceil(n / cols): 2x3 for five qubits.
  static GridLayout near_square(int n_qubits);

  int size() const { return static_cast<int>(placement.size()); }
  bool adjacent(int atom_a, int atom_b) const;
  void validate(int n_qubits) const;
};

struct NoiseParams {
  double t1 = 0.5;
  double t2 = 10e-3;
  double microwave_duration = 25e-6;
  double microwave_depol = 5e-4;
  double rz_depol = 1e-3;
  double cz_fidelity = 1.0;
  double cz_phi = std::numbers::pi / 4;
  RelaxationModel relaxation = RelaxationModel::amplitude_damping;

  void validate() const;
};

struct NativeCircuit {
  int n_qubits = 0;
  GridLayout layout;
  std::vector<NativeGate> gates;
  std::vector<int> final_map;  // logical qubit -> atom
  int swap_count = 0;

  int cz_count() const;
};

struct CzErrorParams {
  double e1 = 0;
  double delta = 0;
};

/// Splits 1 - F equally between the E1 and δ terms of the first-order formula.
CzErrorParams cz_error_params(double fidelity);

/// The imperfect CZ in the |ab⟩ basis, a the high bit:
///   [[1, 0, 0, 0], [0, c, s e^{iφ}, 0], [0, -s e^{-iφ}, c, 0], [0, 0, 0, -e^{iδ}]]
/// with c = sqrt(1 - E1), s = sqrt(E1).
Matrix4c imperfect_cz(double e1, double phi, double delta);

/// (d F_e + 1) / (d + 1) with F_e = |Tr(V† U)|² / d².
double average_gate_fidelity(const MatrixXc& actual, const MatrixXc& ideal);

/// Lowers one ansatz evaluation to native gates. The circuit starts with a
/// global π/2 pulse about Y that takes |0...0⟩ to |+⟩^N.
NativeCircuit compile(const AnsatzSpec& spec, const ParamVector& params, const Graph& graph,
                      const GridLayout& layout);

/// Pure-state simulation from |0...0⟩, no noise.
QuantumState simulate_ideal(const NativeCircuit& circuit);

/// Density-matrix simulation under `noise`; F = 1 disables every noise source
/// and the returned state is pure.
QuantumState simulate_noisy(const NativeCircuit& circuit, const NoiseParams& noise);

/// `RZ q angle`, `GXY axis angle`, `CZ a b`, one per line, with `#` headers for
/// the qubit count, grid and final map.
void write_circuit(std::ostream& out, const NativeCircuit& circuit);
NativeCircuit read_circuit(std::istream& in);

}  // namespace famq
