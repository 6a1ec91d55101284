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

// The free-axis-mixer QAOA family: standard QAOA plus the 1-, p-, N- and
// pN-FAM variants, their flat parameter layout, and forward evolution.
//
// Parameter layout: (γ_1..γ_p, β_1..β_p, θ block), where the θ block is
//   1-FAM   (θ)
//   p-FAM   (θ^1..θ^p)
//   N-FAM   (θ_1..θ_N)
//   pN-FAM  (θ_n^k), k outer, n inner.

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "famq/simcore.hpp"

namespace famq {

enum class Variant { qaoa, fam1, famp, famn, fampn };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

struct AnsatzSpec {
  Variant variant = Variant::qaoa;
  int rounds = 1;
  int n_qubits = 1;
  bool scaled = false;  // θ^k = k·θ; only meaningful for 1-FAM and N-FAM

  /// Throws on p < 1, bad N, or scaling requested for a variant without it.
  void validate() const;
  /// "N-FAM(scaled)", "QAOA", ...
  std::string label() const;
};

using ParamVector = Eigen::VectorXd;

int parameter_count(const AnsatzSpec& spec);

/// Axis angle of qubit `qubit_n` (0-based) in round `round_k` (1-based).
double effective_theta(const AnsatzSpec& spec, const ParamVector& params, int round_k, int qubit_n);

/// γ_k, β_k and the axis angles of round k (1-based).
double gamma_of(const AnsatzSpec& spec, const ParamVector& params, int round_k);
MixerRound mixer_round(const AnsatzSpec& spec, const ParamVector& params, int round_k);

/// Per-round Z-phase vector φ^k injected right after the round-k problem unitary.
/// Called with (round_k, γ_k); the returned vector has length N.
using PhaseInjector = std::function<Eigen::VectorXd(int round_k, double gamma_k)>;

/// |+⟩^N followed by, for k = 1..p: e^{-iγ_k H}, the injector's Z phases, the mixer.
QuantumState evolve(const AnsatzSpec& spec, const ParamVector& params, const DiagonalObservable& problem,
                    const PhaseInjector& error_hook = {});

/// ⟨ψ|H|ψ⟩ of the evolved state: the unit of work counted against optimizer budgets.
double cost(const AnsatzSpec& spec, const ParamVector& params, const DiagonalObservable& problem,
            const PhaseInjector& error_hook = {});

/// Per-parameter search box: γ ∈ [0, 2π), β ∈ [0, π), θ ∈ [0, 2π).
struct Bounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Eigen::Index size() const { return lower.size(); }
};

Bounds default_bounds(const AnsatzSpec& spec);

/// Packs a parameter vector from its blocks; `thetas` must match the variant's θ-block length.
ParamVector pack_params(const AnsatzSpec& spec, const Eigen::VectorXd& gammas, const Eigen::VectorXd& betas,
                        const Eigen::VectorXd& thetas = {});

}  // namespace famq
