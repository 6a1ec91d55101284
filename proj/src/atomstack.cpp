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

#include "famq/atomstack.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "famq/errors.hpp"

namespace famq {
namespace {

using std::numbers::pi;

Matrix2c rz_matrix(double angle) {
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = std::polar(1.0, -angle / 2);
  m(1, 1) = std::polar(1.0, angle / 2);
  return m;
}

Matrix2c xy_matrix(double axis, double rotation) {
  const double c = std::cos(rotation / 2), s = std::sin(rotation / 2);
  const Complex i(0, 1);
  Matrix2c m;
  m << c, -i * s * std::polar(1.0, -axis), -i * s * std::polar(1.0, axis), c;
  return m;
}

Matrix4c unitary_superop(const Matrix2c& u) { return Eigen::kroneckerProduct(u.conjugate(), u); }

Matrix4c channel_superop(const KrausSet<double>& kraus) { return kraus_superoperator(kraus); }

void check_gate(const NativeGate& gate, int n) {
  std::visit(
      [n](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, LocalRz>) {
          if (g.qubit < 0 || g.qubit >= n) throw TargetError("RZ qubit out of range");
          if (!std::isfinite(g.angle)) throw RangeError("RZ angle is not finite");
        } else if constexpr (std::is_same_v<G, GlobalXY>) {
          if (!std::isfinite(g.axis) || !std::isfinite(g.rotation)) throw RangeError("GXY angle is not finite");
        } else {
          if (g.a < 0 || g.a >= n || g.b < 0 || g.b >= n) throw TargetError("CZ qubit out of range");
          if (g.a == g.b) throw TargetError("CZ endpoints must differ");
        }
      },
      gate);
}

void check_circuit(const NativeCircuit& c) {
  check_qubit_count(c.n_qubits);
  if (static_cast<int>(c.final_map.size()) != c.n_qubits) throw DimensionError("final map has wrong length");
  std::vector<int> sorted = c.final_map;
  std::sort(sorted.begin(), sorted.end());
  for (int q = 0; q < c.n_qubits; ++q) {
    if (sorted[q] != q) throw TargetError("final map is not a permutation");
  }
  for (const auto& g : c.gates) check_gate(g, c.n_qubits);
}

class Emitter {
 public:
  Emitter(NativeCircuit& circuit, const GridLayout& layout) : c_(circuit), layout_(layout) {
    const int n = circuit.n_qubits;
    where_.resize(n);
    who_.resize(n);
    for (int q = 0; q < n; ++q) where_[q] = who_[q] = q;
  }

  int atom(int logical) const { return where_[logical]; }
  const std::vector<int>& map() const { return where_; }

  void rz(int atom, double angle) { c_.gates.push_back(LocalRz{atom, angle}); }
  void xy(double axis, double rotation) { c_.gates.push_back(GlobalXY{axis, rotation}); }
  void cz(int a, int b) { c_.gates.push_back(CZ{a, b}); }

  // Ry(π/2)·Z on the targets, identity elsewhere, up to a global phase.
  void hadamard(std::initializer_list<int> atoms) {
    for (int a : atoms) rz(a, pi);
    xy(pi / 2, pi / 4);
    for (int a : atoms) rz(a, pi);
    xy(pi / 2, -pi / 4);
    for (int a : atoms) rz(a, -pi);
  }

  void swap(int a, int b) {
    hadamard({b});
    cz(a, b);
    hadamard({a, b});
    cz(a, b);
    hadamard({a, b});
    cz(a, b);
    hadamard({b});
    std::swap(who_[a], who_[b]);
    where_[who_[a]] = a;
    where_[who_[b]] = b;
    ++c_.swap_count;
  }

  // Moves logical u next to logical v along a shortest path through occupied sites.
  void route(int u, int v) {
    const int from = where_[u], to = where_[v];
    if (layout_.adjacent(from, to)) return;
    const int n = c_.n_qubits;
    std::vector<int> parent(n, -1);
    std::deque<int> queue{from};
    parent[from] = from;
    while (!queue.empty() && parent[to] < 0) {
      const int s = queue.front();
      queue.pop_front();
      for (int t = 0; t < n; ++t) {
        if (parent[t] < 0 && layout_.adjacent(s, t)) {
          parent[t] = s;
          queue.push_back(t);
        }
      }
    }
    if (parent[to] < 0) throw RoutingError("no path between atoms " + std::to_string(from) + " and " + std::to_string(to));
    std::vector<int> path;
    for (int s = to; s != from; s = parent[s]) path.push_back(s);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 2 < path.size(); ++i) swap(path[i], path[i + 1]);
  }

 private:
  NativeCircuit& c_;
  const GridLayout& layout_;
  std::vector<int> where_;  // logical -> atom
  std::vector<int> who_;    // atom -> logical
};

}  // namespace

GridLayout GridLayout::row_major(int n_qubits, int rows, int cols) {
  if (n_qubits < 1 || rows < 1 || cols < 1 || rows * cols < n_qubits) {
    throw RangeError("grid too small for the register");
  }
  GridLayout layout{rows, cols, {}};
  for (int q = 0; q < n_qubits; ++q) layout.placement.emplace_back(q / cols, q % cols);
  return layout;
}

GridLayout GridLayout::near_square(int n_qubits) {
  if (n_qubits < 1) throw RangeError("grid needs at least one qubit");
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_qubits))));
  const int rows = (n_qubits + cols - 1) / cols;
  return row_major(n_qubits, rows, cols);
}

bool GridLayout::adjacent(int atom_a, int atom_b) const {
  const auto [ra, ca] = placement.at(static_cast<std::size_t>(atom_a));
  const auto [rb, cb] = placement.at(static_cast<std::size_t>(atom_b));
  return std::abs(ra - rb) + std::abs(ca - cb) == 1;
}

void GridLayout::validate(int n_qubits) const {
  if (rows < 1 || cols < 1) throw RangeError("grid dimensions must be positive");
  if (size() != n_qubits) throw DimensionError("layout does not place every qubit");
  std::set<std::pair<int, int>> seen;
  for (const auto& site : placement) {
    if (site.first < 0 || site.first >= rows || site.second < 0 || site.second >= cols) {
      throw RangeError("site outside the grid");
    }
    if (!seen.insert(site).second) throw RangeError("two qubits share a site");
  }
}

void NoiseParams::validate() const {
  if (!(t1 > 0) || !(t2 > 0) || t2 > 2 * t1) throw RangeError("need 0 < T2 <= 2 T1");
  if (!(microwave_duration >= 0)) throw RangeError("negative gate duration");
  for (double p : {microwave_depol, rz_depol}) {
    if (!(p >= 0 && p <= 1)) throw RangeError("depolarizing probability outside [0, 1]");
  }
  if (!(cz_fidelity > 0 && cz_fidelity <= 1)) throw RangeError("CZ fidelity outside (0, 1]");
  if (!std::isfinite(cz_phi)) throw RangeError("CZ phase is not finite");
}

int NativeCircuit::cz_count() const {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(),
                                        [](const NativeGate& g) { return std::holds_alternative<CZ>(g); }));
}

CzErrorParams cz_error_params(double fidelity) {
  if (!(fidelity > 0 && fidelity <= 1)) throw RangeError("CZ fidelity outside (0, 1]");
  const double infidelity = 1 - fidelity;
  return {1.25 * infidelity, std::sqrt(infidelity * 10.0 / 3.0)};
}

Matrix4c imperfect_cz(double e1, double phi, double delta) {
  if (!(e1 >= 0 && e1 <= 1)) throw RangeError("E1 outside [0, 1]");
  const double c = std::sqrt(1 - e1), s = std::sqrt(e1);
  Matrix4c u = Matrix4c::Zero();
  u(0, 0) = 1;
  u(1, 1) = c;
  u(1, 2) = s * std::polar(1.0, phi);
  u(2, 1) = -s * std::polar(1.0, -phi);
  u(2, 2) = c;
  u(3, 3) = -std::polar(1.0, delta);
  return u;
}

double average_gate_fidelity(const MatrixXc& actual, const MatrixXc& ideal) {
  if (actual.rows() != ideal.rows() || actual.cols() != ideal.cols() || actual.rows() != actual.cols()) {
    throw DimensionError("gate fidelity needs equal square matrices");
  }
  const double d = static_cast<double>(actual.rows());
  const double fe = std::norm((ideal.adjoint() * actual).trace()) / (d * d);
  return (d * fe + 1) / (d + 1);
}

NativeCircuit compile(const AnsatzSpec& spec, const ParamVector& params, const Graph& graph,
                      const GridLayout& layout) {
  spec.validate();
  if (params.size() != parameter_count(spec)) throw DimensionError("parameter vector has wrong length");
  if (graph.n_nodes() != spec.n_qubits) throw DimensionError("graph size does not match the ansatz");
  layout.validate(spec.n_qubits);

  NativeCircuit circuit;
  circuit.n_qubits = spec.n_qubits;
  circuit.layout = layout;
  Emitter emit(circuit, layout);
  emit.xy(pi / 2, pi / 2);
  for (int k = 1; k <= spec.rounds; ++k) {
    const double gamma = gamma_of(spec, params, k);
    for (const auto& [u, v] : graph.edges()) {
      emit.route(u, v);
      const int a = emit.atom(u), t = emit.atom(v);
      emit.hadamard({t});
      emit.cz(a, t);
      emit.hadamard({t});
      emit.rz(t, gamma);
      emit.hadamard({t});
      emit.cz(a, t);
      emit.hadamard({t});
    }
    const MixerRound round = mixer_round(spec, params, k);
    for (int n = 0; n < spec.n_qubits; ++n) {
      if (round.thetas[n] != 0) emit.rz(emit.atom(n), round.thetas[n]);
    }
    emit.xy(0, 2 * round.beta);
    for (int n = 0; n < spec.n_qubits; ++n) {
      if (round.thetas[n] != 0) emit.rz(emit.atom(n), -round.thetas[n]);
    }
  }
  circuit.final_map = emit.map();
  return circuit;
}

QuantumState simulate_ideal(const NativeCircuit& circuit) {
  check_circuit(circuit);
  const int n = circuit.n_qubits;
  QuantumState state = basis_state(n, 0);
  for (const auto& gate : circuit.gates) {
    if (const auto* g = std::get_if<LocalRz>(&gate)) {
      state = apply_single_qubit(std::move(state), rz_matrix(g->angle), g->qubit);
    } else if (const auto* g = std::get_if<GlobalXY>(&gate)) {
      const Matrix2c r = xy_matrix(g->axis, g->rotation);
      for (int q = 0; q < n; ++q) state = apply_single_qubit(std::move(state), r, q);
    } else {
      const auto& cz = std::get<CZ>(gate);
      state = apply_gate(std::move(state), MatrixXc(imperfect_cz(0, 0, 0)), {cz.b, cz.a});
    }
  }
  return permute_qubits(state, std::span<const int>(circuit.final_map));
}

QuantumState simulate_noisy(const NativeCircuit& circuit, const NoiseParams& noise) {
  noise.validate();
  if (noise.cz_fidelity == 1) return simulate_ideal(circuit);
  check_circuit(circuit);
  const int n = circuit.n_qubits;

  const auto err = cz_error_params(noise.cz_fidelity);
  const MatrixXc cz_u = imperfect_cz(err.e1, noise.cz_phi, err.delta);
  const Matrix4c after_xy =
      channel_superop(depolarizing(noise.microwave_depol)) *
      channel_superop(thermal_relaxation(noise.microwave_duration, noise.t1, noise.t2, noise.relaxation));
  const Matrix4c after_rz = channel_superop(depolarizing(noise.rz_depol));

  // Single-qubit superoperators accumulate per qubit until a CZ touches it.
  std::vector<Matrix4c> pending(n, Matrix4c::Identity());
  std::vector<bool> dirty(n, false);
  QuantumState state = basis_state(n, 0).to_mixed();
  auto flush = [&](int q) {
    if (!dirty[q]) return;
    const std::array<int, 1> t{q};
    state = apply_superoperator(std::move(state), MatrixXc(pending[q]), std::span<const int>(t));
    pending[q].setIdentity();
    dirty[q] = false;
  };

  for (const auto& gate : circuit.gates) {
    if (const auto* g = std::get_if<LocalRz>(&gate)) {
      pending[g->qubit] = after_rz * unitary_superop(rz_matrix(g->angle)) * pending[g->qubit];
      dirty[g->qubit] = true;
    } else if (const auto* g = std::get_if<GlobalXY>(&gate)) {
      const Matrix4c step = after_xy * unitary_superop(xy_matrix(g->axis, g->rotation));
      for (int q = 0; q < n; ++q) {
        pending[q] = step * pending[q];
        dirty[q] = true;
      }
    } else {
      const auto& cz = std::get<CZ>(gate);
      flush(cz.a);
      flush(cz.b);
      state = apply_gate(std::move(state), cz_u, {cz.b, cz.a});
    }
  }
  for (int q = 0; q < n; ++q) flush(q);
  return permute_qubits(state, std::span<const int>(circuit.final_map));
}

void write_circuit(std::ostream& out, const NativeCircuit& circuit) {
  out << "# qubits " << circuit.n_qubits << '\n';
  out << "# grid " << circuit.layout.rows << ' ' << circuit.layout.cols << '\n';
  out << "# swaps " << circuit.swap_count << '\n';
  out << "# final_map";
  for (int a : circuit.final_map) out << ' ' << a;
  out << '\n';
  const auto flags = out.flags();
  const auto precision = out.precision(12);
  for (const auto& gate : circuit.gates) {
    if (const auto* g = std::get_if<LocalRz>(&gate)) {
      out << "RZ " << g->qubit << ' ' << g->angle << '\n';
    } else if (const auto* g = std::get_if<GlobalXY>(&gate)) {
      out << "GXY " << g->axis << ' ' << g->rotation << '\n';
    } else {
      const auto& cz = std::get<CZ>(gate);
      out << "CZ " << cz.a << ' ' << cz.b << '\n';
    }
  }
  out.precision(precision);
  out.flags(flags);
}

NativeCircuit read_circuit(std::istream& in) {
  NativeCircuit circuit;
  int n = -1, rows = 0, cols = 0, max_index = -1;
  std::string line;
  int line_no = 0;
  auto bad = [&](const std::string& why) {
    return ConfigError("circuit line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "#") {
      std::string key;
      ls >> key;
      if (key == "qubits") {
        if (!(ls >> n)) throw bad("bad qubit count");
      } else if (key == "grid") {
        if (!(ls >> rows >> cols)) throw bad("bad grid");
      } else if (key == "swaps") {
        ls >> circuit.swap_count;
      } else if (key == "final_map") {
        for (int a; ls >> a;) circuit.final_map.push_back(a);
      }
      continue;
    }
    if (word.front() == '#') continue;
    if (word == "RZ") {
      LocalRz g;
      if (!(ls >> g.qubit >> g.angle)) throw bad("expected RZ q angle");
      max_index = std::max(max_index, g.qubit);
      circuit.gates.emplace_back(g);
    } else if (word == "GXY") {
      GlobalXY g;
      if (!(ls >> g.axis >> g.rotation)) throw bad("expected GXY axis angle");
      circuit.gates.emplace_back(g);
    } else if (word == "CZ") {
      CZ g;
      if (!(ls >> g.a >> g.b)) throw bad("expected CZ a b");
      max_index = std::max({max_index, g.a, g.b});
      circuit.gates.emplace_back(g);
    } else {
      throw bad("unknown gate '" + word + "'");
    }
    if (ls >> word) throw bad("trailing tokens");
  }
  circuit.n_qubits = n > 0 ? n : max_index + 1;
  check_qubit_count(circuit.n_qubits);
  circuit.layout = rows > 0 ? GridLayout::row_major(circuit.n_qubits, rows, cols)
                            : GridLayout::near_square(circuit.n_qubits);
  if (circuit.final_map.empty()) {
    for (int q = 0; q < circuit.n_qubits; ++q) circuit.final_map.push_back(q);
  }
  check_circuit(circuit);
  return circuit;
}

}  // namespace famq
