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

// Single-qubit Kraus sets. Each builder returns a trace-preserving set.

#include <cmath>
#include <vector>

#include "famq/errors.hpp"
#include "famq/simcore.hpp"

namespace famq {

template <typename Scalar>
using KrausSet = std::vector<CMatrix<Scalar>>;

namespace pauli {

template <typename Scalar = double>
CMatrix<Scalar> identity() {
  return CMatrix<Scalar>::Identity(2, 2);
}

template <typename Scalar = double>
CMatrix<Scalar> x() {
  CMatrix<Scalar> m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

template <typename Scalar = double>
CMatrix<Scalar> y() {
  using C = std::complex<Scalar>;
  CMatrix<Scalar> m(2, 2);
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Scalar = double>
CMatrix<Scalar> z() {
  CMatrix<Scalar> m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace pauli

namespace detail {
inline void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ChannelError(std::string(what) + " probability outside [0, 1]");
}
}  // namespace detail

/// ρ → (1 - p)ρ + p·I/2; p = 1 is full depolarization.
template <typename Scalar = double>
KrausSet<Scalar> depolarizing(Scalar p) {
  detail::check_probability(static_cast<double>(p), "depolarizing");
  const Scalar a = std::sqrt(Scalar(1) - Scalar(3) * p / Scalar(4));
  const Scalar b = std::sqrt(p / Scalar(4));
  return {a * pauli::identity<Scalar>(), b * pauli::x<Scalar>(), b * pauli::y<Scalar>(),
          b * pauli::z<Scalar>()};
}

/// Relaxation |1⟩ → |0⟩ with probability p.
template <typename Scalar = double>
KrausSet<Scalar> amplitude_damping(Scalar p) {
  detail::check_probability(static_cast<double>(p), "amplitude damping");
  CMatrix<Scalar> k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(Scalar(1) - p);
  k1 << 0, std::sqrt(p), 0, 0;
  return {k0, k1};
}

/// Relaxation towards the populations (1 - excited, excited); excited = 1/2
/// drives every state to I/2.
template <typename Scalar = double>
KrausSet<Scalar> generalized_amplitude_damping(Scalar p, Scalar excited) {
  detail::check_probability(static_cast<double>(p), "damping");
  detail::check_probability(static_cast<double>(excited), "excited population");
  const Scalar g = std::sqrt(Scalar(1) - excited);
  const Scalar e = std::sqrt(excited);
  CMatrix<Scalar> k0(2, 2), k1(2, 2), k2(2, 2), k3(2, 2);
  k0 << g, 0, 0, g * std::sqrt(Scalar(1) - p);
  k1 << 0, g * std::sqrt(p), 0, 0;
  k2 << e * std::sqrt(Scalar(1) - p), 0, 0, e;
  k3 << 0, 0, e * std::sqrt(p), 0;
  return {k0, k1, k2, k3};
}

/// Pure dephasing: off-diagonal elements scale by (1 - p).
template <typename Scalar = double>
KrausSet<Scalar> phase_damping(Scalar p) {
  detail::check_probability(static_cast<double>(p), "dephasing");
  return {std::sqrt(Scalar(1) - p / Scalar(2)) * pauli::identity<Scalar>(),
          std::sqrt(p / Scalar(2)) * pauli::z<Scalar>()};
}

/// Kraus set of "first `first`, then `second`".
template <typename Scalar>
KrausSet<Scalar> compose(const KrausSet<Scalar>& first, const KrausSet<Scalar>& second) {
  KrausSet<Scalar> out;
  out.reserve(first.size() * second.size());
  for (const auto& b : second) {
    for (const auto& a : first) out.push_back(b * a);
  }
  return out;
}

/// How T1 relaxation treats populations during free decay.
enum class RelaxationModel {
  amplitude_damping,  // towards |0⟩
  symmetric,          // towards I/2
};

/// T1/T2 decay for `duration`: damping with p = 1 - e^{-t/T1} followed by pure
/// dephasing with p = 1 - e^{-t/Tφ}, 1/Tφ = 1/T2 - 1/(2 T1). Requires T2 <= 2 T1.
template <typename Scalar = double>
KrausSet<Scalar> thermal_relaxation(Scalar duration, Scalar t1, Scalar t2,
                                    RelaxationModel model = RelaxationModel::amplitude_damping) {
  if (!(t1 > 0) || !(t2 > 0) || t2 > Scalar(2) * t1) {
    throw ChannelError("relaxation times must satisfy 0 < T2 <= 2 T1");
  }
  const Scalar p_amp = Scalar(1) - std::exp(-duration / t1);
  const Scalar rate_phi = Scalar(1) / t2 - Scalar(1) / (Scalar(2) * t1);
  const Scalar p_deph = Scalar(1) - std::exp(-duration * rate_phi);
  const KrausSet<Scalar> damping = model == RelaxationModel::amplitude_damping
                                       ? amplitude_damping<Scalar>(p_amp)
                                       : generalized_amplitude_damping<Scalar>(p_amp, Scalar(0.5));
  return compose(damping, phase_damping<Scalar>(p_deph));
}

}  // namespace famq
