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

#include "famq/ansatz.hpp"

#include <numbers>

namespace famq {

namespace {

int theta_block_size(const AnsatzSpec& spec) {
  switch (spec.variant) {
    case Variant::qaoa: return 0;
    case Variant::fam1: return 1;
    case Variant::famp: return spec.rounds;
    case Variant::famn: return spec.n_qubits;
    case Variant::fampn: return spec.rounds * spec.n_qubits;
  }
  return 0;
}

void check_params(const AnsatzSpec& spec, const ParamVector& params) {
  if (params.size() != parameter_count(spec)) {
    throw DimensionError("parameter vector has length " + std::to_string(params.size()) + ", " +
                         spec.label() + " expects " + std::to_string(parameter_count(spec)));
  }
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::qaoa: return "QAOA";
    case Variant::fam1: return "1-FAM";
    case Variant::famp: return "p-FAM";
    case Variant::famn: return "N-FAM";
    case Variant::fampn: return "pN-FAM";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::qaoa, Variant::fam1, Variant::famp, Variant::famn, Variant::fampn}) {
    if (name == to_string(v)) return v;
  }
  throw ConfigError("unknown ansatz variant '" + std::string(name) + "'");
}

void AnsatzSpec::validate() const {
  if (rounds < 1) throw RangeError("rounds must be >= 1");
  check_qubit_count(n_qubits);
  if (scaled && variant != Variant::fam1 && variant != Variant::famn) {
    throw ConfigError("scaled axis angles are only defined for 1-FAM and N-FAM");
  }
}

std::string AnsatzSpec::label() const {
  std::string out(to_string(variant));
  if (scaled) out += "(scaled)";
  return out;
}

int parameter_count(const AnsatzSpec& spec) {
  spec.validate();
  return 2 * spec.rounds + theta_block_size(spec);
}

double effective_theta(const AnsatzSpec& spec, const ParamVector& params, int round_k, int qubit_n) {
  check_params(spec, params);
  if (round_k < 1 || round_k > spec.rounds) throw RangeError("round index outside [1, p]");
  if (qubit_n < 0 || qubit_n >= spec.n_qubits) throw RangeError("qubit index outside [0, N)");
  const Eigen::Index base = 2 * spec.rounds;
  const double scale = spec.scaled ? static_cast<double>(round_k) : 1.0;
  switch (spec.variant) {
    case Variant::qaoa: return 0.0;
    case Variant::fam1: return scale * params[base];
    case Variant::famp: return params[base + round_k - 1];
    case Variant::famn: return scale * params[base + qubit_n];
    case Variant::fampn: return params[base + (round_k - 1) * spec.n_qubits + qubit_n];
  }
  return 0.0;
}

double gamma_of(const AnsatzSpec& spec, const ParamVector& params, int round_k) {
  check_params(spec, params);
  if (round_k < 1 || round_k > spec.rounds) throw RangeError("round index outside [1, p]");
  return params[round_k - 1];
}

MixerRound mixer_round(const AnsatzSpec& spec, const ParamVector& params, int round_k) {
  MixerRound round;
  round.beta = params[spec.rounds + round_k - 1];
  round.thetas.resize(spec.n_qubits);
  for (int n = 0; n < spec.n_qubits; ++n) round.thetas[n] = effective_theta(spec, params, round_k, n);
  return round;
}

QuantumState evolve(const AnsatzSpec& spec, const ParamVector& params, const DiagonalObservable& problem,
                    const PhaseInjector& error_hook) {
  check_params(spec, params);
  if (problem.n_qubits() != spec.n_qubits) throw DimensionError("problem size does not match ansatz");
  QuantumState state = plus_state(spec.n_qubits);
  for (int k = 1; k <= spec.rounds; ++k) {
    const double gamma = params[k - 1];
    state = apply_diagonal_phase(std::move(state), problem, gamma);
    if (error_hook) state = apply_z_rotations(std::move(state), Eigen::VectorXd(error_hook(k, gamma)));
    state = apply_mixer(std::move(state), mixer_round(spec, params, k));
  }
  return state;
}

double cost(const AnsatzSpec& spec, const ParamVector& params, const DiagonalObservable& problem,
            const PhaseInjector& error_hook) {
  return expectation(evolve(spec, params, problem, error_hook), problem);
}

Bounds default_bounds(const AnsatzSpec& spec) {
  using std::numbers::pi;
  const int count = parameter_count(spec);
  Bounds b{Eigen::VectorXd::Zero(count), Eigen::VectorXd::Constant(count, 2 * pi)};
  b.upper.segment(spec.rounds, spec.rounds).setConstant(pi);
  return b;
}

ParamVector pack_params(const AnsatzSpec& spec, const Eigen::VectorXd& gammas, const Eigen::VectorXd& betas,
                        const Eigen::VectorXd& thetas) {
  if (gammas.size() != spec.rounds || betas.size() != spec.rounds || thetas.size() != theta_block_size(spec)) {
    throw DimensionError("parameter blocks do not match " + spec.label());
  }
  ParamVector out(parameter_count(spec));
  out << gammas, betas, thetas;
  return out;
}

}  // namespace famq
