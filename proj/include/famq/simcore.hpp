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

// Dense pure-state and density-matrix simulation for up to kMaxQubits qubits.
//
// Basis convention: little-endian, qubit n is bit n of the basis index.
// A density matrix is stored column-major, so its flattened storage is a
// vector over 2N "virtual" qubits: bits [0, N) index the row (ket side) and
// bits [N, 2N) index the column (bra side). Every mixed-state kernel below is
// the pure-state kernel applied to that flattened vector.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "famq/errors.hpp"
#include "famq/tolerances.hpp"

namespace famq {

enum class StateKind { pure, mixed };

template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using VectorXc = CVector<double>;
using MatrixXc = CMatrix<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

inline void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

template <typename Scalar>
class BasicState {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = CVector<Scalar>;
  using Matrix = CMatrix<Scalar>;

  static BasicState pure(int n_qubits, Vector amplitudes) {
    check_qubit_count(n_qubits);
    if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) {
      throw DimensionError("amplitude vector length does not match 2^N");
    }
    BasicState s;
    s.n_qubits_ = n_qubits;
    s.kind_ = StateKind::pure;
    s.amplitudes_ = std::move(amplitudes);
    return s;
  }

  static BasicState mixed(int n_qubits, Matrix density) {
    check_qubit_count(n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (density.rows() != dim || density.cols() != dim) {
      throw DimensionError("density matrix shape does not match 2^N x 2^N");
    }
    BasicState s;
    s.n_qubits_ = n_qubits;
    s.kind_ = StateKind::mixed;
    s.density_ = std::move(density);
    return s;
  }

  int n_qubits() const { return n_qubits_; }
  StateKind kind() const { return kind_; }
  bool is_pure() const { return kind_ == StateKind::pure; }
  Eigen::Index dim() const { return Eigen::Index{1} << n_qubits_; }

  const Vector& amplitudes() const { return amplitudes_; }
  Vector& amplitudes() { return amplitudes_; }
  const Matrix& density() const { return density_; }
  Matrix& density() { return density_; }

  /// Flattened storage and its bit width (N for pure, 2N for mixed).
  Complex* data() { return is_pure() ? amplitudes_.data() : density_.data(); }
  int storage_bits() const { return is_pure() ? n_qubits_ : 2 * n_qubits_; }

  /// |ψ⟩⟨ψ| for a pure state; a copy for a mixed one.
  BasicState to_mixed() const {
    if (!is_pure()) return *this;
    return mixed(n_qubits_, amplitudes_ * amplitudes_.adjoint());
  }

 private:
  BasicState() = default;

  int n_qubits_ = 0;
  StateKind kind_ = StateKind::pure;
  Vector amplitudes_;
  Matrix density_;
};

/// Real diagonal of an observable in the computational basis.
template <typename Scalar>
class BasicDiagonal {
 public:
  explicit BasicDiagonal(RVector<Scalar> values) : values_(std::move(values)) {
    const Eigen::Index size = values_.size();
    if (size < 2 || (size & (size - 1)) != 0) {
      throw DimensionError("diagonal length must be a power of two >= 2");
    }
    if (!values_.allFinite()) throw DimensionError("diagonal contains non-finite values");
    n_qubits_ = 0;
    while ((Eigen::Index{1} << n_qubits_) < size) ++n_qubits_;
    check_qubit_count(n_qubits_);
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index size() const { return values_.size(); }
  const RVector<Scalar>& values() const { return values_; }
  Scalar operator[](Eigen::Index z) const { return values_[z]; }

 private:
  RVector<Scalar> values_;
  int n_qubits_ = 0;
};

template <typename Scalar>
struct BasicMixerRound {
  Scalar beta = 0;
  RVector<Scalar> thetas;
};

using QuantumState = BasicState<double>;
using DiagonalObservable = BasicDiagonal<double>;
using MixerRound = BasicMixerRound<double>;

namespace detail {

inline void check_targets(std::span<const int> targets, int n_qubits) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits) {
      throw TargetError("target qubit " + std::to_string(targets[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) throw TargetError("duplicate target qubit");
    }
  }
}

// Applies a 2^k x 2^k matrix to the bits `targets` of a flattened vector with
// `total_bits` bits. Local index bit a corresponds to targets[a].
template <typename Scalar, int Dim>
void apply_dense(std::complex<Scalar>* data, int total_bits,
                 const Eigen::Matrix<std::complex<Scalar>, Dim, Dim>& m,
                 std::span<const int> targets) {
  using C = std::complex<Scalar>;
  const int k = static_cast<int>(targets.size());
  const Eigen::Index local = Eigen::Index{1} << k;

  std::array<int, 8> sorted{};
  std::copy(targets.begin(), targets.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + k);

  std::vector<Eigen::Index> offsets(static_cast<std::size_t>(local));
  for (Eigen::Index l = 0; l < local; ++l) {
    Eigen::Index off = 0;
    for (int a = 0; a < k; ++a) {
      if ((l >> a) & 1) off |= Eigen::Index{1} << targets[static_cast<std::size_t>(a)];
    }
    offsets[static_cast<std::size_t>(l)] = off;
  }

  Eigen::Matrix<C, Dim, 1> buf(local);
  Eigen::Matrix<C, Dim, 1> out(local);
  const Eigen::Index outer = Eigen::Index{1} << (total_bits - k);
  for (Eigen::Index i = 0; i < outer; ++i) {
    Eigen::Index base = i;
    for (int s = 0; s < k; ++s) {
      const int pos = sorted[static_cast<std::size_t>(s)];
      const Eigen::Index low = base & ((Eigen::Index{1} << pos) - 1);
      base = ((base >> pos) << (pos + 1)) | low;
    }
    for (Eigen::Index l = 0; l < local; ++l) buf[l] = data[base + offsets[static_cast<std::size_t>(l)]];
    out.noalias() = m * buf;
    for (Eigen::Index l = 0; l < local; ++l) data[base + offsets[static_cast<std::size_t>(l)]] = out[l];
  }
}

template <typename Scalar>
void apply_single(std::complex<Scalar>* data, int total_bits,
                  const Eigen::Matrix<std::complex<Scalar>, 2, 2>& m, int target) {
  const Eigen::Index stride = Eigen::Index{1} << target;
  const Eigen::Index size = Eigen::Index{1} << total_bits;
  const auto m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (Eigen::Index block = 0; block < size; block += 2 * stride) {
    for (Eigen::Index j = block; j < block + stride; ++j) {
      const auto a0 = data[j];
      const auto a1 = data[j + stride];
      data[j] = m00 * a0 + m01 * a1;
      data[j + stride] = m10 * a0 + m11 * a1;
    }
  }
}

// Dispatches a dynamic-size matrix to the fixed-size kernels where possible.
template <typename Scalar>
void apply_matrix(std::complex<Scalar>* data, int total_bits, const CMatrix<Scalar>& m,
                  std::span<const int> targets) {
  using C = std::complex<Scalar>;
  switch (targets.size()) {
    case 1:
      apply_single<Scalar>(data, total_bits, Eigen::Matrix<C, 2, 2>(m), targets[0]);
      break;
    case 2:
      apply_dense<Scalar, 4>(data, total_bits, Eigen::Matrix<C, 4, 4>(m), targets);
      break;
    default:
      apply_dense<Scalar, Eigen::Dynamic>(data, total_bits, m, targets);
  }
}

template <typename Scalar>
std::vector<int> shifted(std::span<const int> targets, int by) {
  std::vector<int> out(targets.begin(), targets.end());
  for (int& t : out) t += by;
  return out;
}

template <typename Scalar>
void check_matrix_shape(const CMatrix<Scalar>& m, std::size_t n_targets) {
  const Eigen::Index expected = Eigen::Index{1} << n_targets;
  if (m.rows() != expected || m.cols() != expected) {
    throw DimensionError("gate matrix shape does not match the number of targets");
  }
}

}  // namespace detail

/// |+⟩^⊗N: every amplitude 2^(-N/2).
template <typename Scalar = double>
BasicState<Scalar> plus_state(int n_qubits) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const Scalar amp = Scalar(1) / std::sqrt(static_cast<Scalar>(dim));
  return BasicState<Scalar>::pure(n_qubits, CVector<Scalar>::Constant(dim, amp));
}

template <typename Scalar = double>
BasicState<Scalar> basis_state(int n_qubits, Eigen::Index index) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (index < 0 || index >= dim) throw RangeError("basis index out of range");
  CVector<Scalar> amps = CVector<Scalar>::Zero(dim);
  amps[index] = 1;
  return BasicState<Scalar>::pure(n_qubits, std::move(amps));
}

/// Applies diag(e^{-iγ d_z}).
template <typename Scalar>
BasicState<Scalar> apply_diagonal_phase(BasicState<Scalar> state, const BasicDiagonal<Scalar>& obs,
                                        Scalar gamma) {
  if (obs.size() != state.dim()) throw DimensionError("observable length does not match state");
  if (gamma == Scalar(0)) return state;
  const Eigen::Index dim = state.dim();
  CVector<Scalar> phases(dim);
  for (Eigen::Index z = 0; z < dim; ++z) phases[z] = std::polar(Scalar(1), -gamma * obs[z]);
  if (state.is_pure()) {
    state.amplitudes().array() *= phases.array();
  } else {
    auto& rho = state.density();
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto cj = std::conj(phases[j]);
      for (Eigen::Index i = 0; i < dim; ++i) rho(i, j) *= phases[i] * cj;
    }
  }
  return state;
}

/// Diagonal of Σ_n φ_n Z_n; exp(-i·that) is the Z-phase gate with angles φ.
template <typename Scalar>
BasicDiagonal<Scalar> z_field_diagonal(const RVector<Scalar>& phis) {
  const int n = static_cast<int>(phis.size());
  check_qubit_count(n);
  RVector<Scalar> values(Eigen::Index{1} << n);
  for (Eigen::Index z = 0; z < values.size(); ++z) {
    Scalar v = 0;
    for (int q = 0; q < n; ++q) v += ((z >> q) & 1) ? -phis[q] : phis[q];
    values[z] = v;
  }
  return BasicDiagonal<Scalar>(std::move(values));
}

/// Applies exp(-i Σ_n φ_n Z_n).
template <typename Scalar>
BasicState<Scalar> apply_z_rotations(BasicState<Scalar> state, const RVector<Scalar>& phis) {
  if (phis.size() != state.n_qubits()) throw DimensionError("phase vector length must equal N");
  if ((phis.array() == Scalar(0)).all()) return state;
  return apply_diagonal_phase(std::move(state), z_field_diagonal(phis), Scalar(1));
}

/// exp(-iβ(cosθ X - sinθ Y)).
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> mixer_matrix(Scalar beta, Scalar theta) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(beta);
  const Scalar s = std::sin(beta);
  Eigen::Matrix<C, 2, 2> m;
  m << C(c, 0), C(0, -s) * std::polar(Scalar(1), theta),
       C(0, -s) * std::polar(Scalar(1), -theta), C(c, 0);
  return m;
}

template <typename Scalar>
BasicState<Scalar> apply_single_qubit(BasicState<Scalar> state,
                                      const Eigen::Matrix<std::complex<Scalar>, 2, 2>& u, int target) {
  if (target < 0 || target >= state.n_qubits()) throw TargetError("target qubit out of range");
  detail::apply_single<Scalar>(state.data(), state.storage_bits(), u, target);
  if (!state.is_pure()) {
    detail::apply_single<Scalar>(state.data(), state.storage_bits(), u.conjugate(),
                                 target + state.n_qubits());
  }
  return state;
}

/// Applies ⊗_n exp(-iβ(cosθ_n X_n - sinθ_n Y_n)); the factors commute so the product is exact.
template <typename Scalar>
BasicState<Scalar> apply_mixer(BasicState<Scalar> state, const BasicMixerRound<Scalar>& round) {
  if (round.thetas.size() != state.n_qubits()) throw DimensionError("mixer thetas length must equal N");
  for (int q = 0; q < state.n_qubits(); ++q) {
    state = apply_single_qubit(std::move(state), mixer_matrix(round.beta, round.thetas[q]), q);
  }
  return state;
}

/// Embedded action of a 2^k x 2^k unitary on `targets` (conjugation for mixed states).
/// The matrix is not checked for unitarity.
template <typename Scalar>
BasicState<Scalar> apply_gate(BasicState<Scalar> state, const CMatrix<Scalar>& unitary,
                              std::span<const int> targets) {
  detail::check_targets(targets, state.n_qubits());
  detail::check_matrix_shape(unitary, targets.size());
  detail::apply_matrix<Scalar>(state.data(), state.storage_bits(), unitary, targets);
  if (!state.is_pure()) {
    const auto bra = detail::shifted<Scalar>(targets, state.n_qubits());
    detail::apply_matrix<Scalar>(state.data(), state.storage_bits(), CMatrix<Scalar>(unitary.conjugate()),
                                 bra);
  }
  return state;
}

template <typename Scalar>
BasicState<Scalar> apply_gate(BasicState<Scalar> state, const CMatrix<Scalar>& unitary,
                              std::initializer_list<int> targets) {
  const std::vector<int> t(targets);
  return apply_gate(std::move(state), unitary, std::span<const int>(t));
}

/// Maximum entry of |Σ K†K - I|.
template <typename Scalar>
Scalar kraus_completeness_error(const std::vector<CMatrix<Scalar>>& kraus) {
  if (kraus.empty()) return std::numeric_limits<Scalar>::infinity();
  const Eigen::Index d = kraus.front().rows();
  CMatrix<Scalar> sum = CMatrix<Scalar>::Zero(d, d);
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) throw DimensionError("ragged Kraus set");
    sum.noalias() += k.adjoint() * k;
  }
  return (sum - CMatrix<Scalar>::Identity(d, d)).cwiseAbs().maxCoeff();
}

/// Superoperator Σ K̄ ⊗ K acting on the flattened (ket bits, bra bits) of the targets.
template <typename Scalar>
CMatrix<Scalar> kraus_superoperator(const std::vector<CMatrix<Scalar>>& kraus) {
  const Eigen::Index d = kraus.front().rows();
  CMatrix<Scalar> s = CMatrix<Scalar>::Zero(d * d, d * d);
  for (const auto& k : kraus) s += Eigen::kroneckerProduct(k.conjugate(), k);
  return s;
}

/// Applies a superoperator built by kraus_superoperator; no completeness check.
template <typename Scalar>
BasicState<Scalar> apply_superoperator(BasicState<Scalar> state, const CMatrix<Scalar>& superop,
                                       std::span<const int> targets) {
  if (state.is_pure()) throw ChannelError("channels require a mixed state");
  detail::check_targets(targets, state.n_qubits());
  const Eigen::Index d = Eigen::Index{1} << targets.size();
  if (superop.rows() != d * d || superop.cols() != d * d) {
    throw DimensionError("superoperator shape does not match the number of targets");
  }
  std::vector<int> all(targets.begin(), targets.end());
  for (int t : targets) all.push_back(t + state.n_qubits());
  detail::apply_matrix<Scalar>(state.data(), state.storage_bits(), superop, all);
  return state;
}

/// ρ ← Σ K ρ K†.
template <typename Scalar>
BasicState<Scalar> apply_kraus(BasicState<Scalar> state, const std::vector<CMatrix<Scalar>>& kraus,
                               std::span<const int> targets) {
  if (state.is_pure()) throw ChannelError("channels require a mixed state");
  detail::check_targets(targets, state.n_qubits());
  for (const auto& k : kraus) detail::check_matrix_shape(k, targets.size());
  if (kraus_completeness_error(kraus) > Tolerances::kraus) {
    throw ChannelError("Kraus set is not trace preserving");
  }
  return apply_superoperator(std::move(state), kraus_superoperator(kraus), targets);
}

template <typename Scalar>
BasicState<Scalar> apply_kraus(BasicState<Scalar> state, const std::vector<CMatrix<Scalar>>& kraus,
                               std::initializer_list<int> targets) {
  const std::vector<int> t(targets);
  return apply_kraus(std::move(state), kraus, std::span<const int>(t));
}

/// Computational-basis probabilities.
template <typename Scalar>
RVector<Scalar> probabilities(const BasicState<Scalar>& state) {
  if (state.is_pure()) return state.amplitudes().cwiseAbs2();
  return state.density().diagonal().real();
}

template <typename Scalar>
Scalar expectation(const BasicState<Scalar>& state, const BasicDiagonal<Scalar>& obs) {
  if (obs.size() != state.dim()) throw DimensionError("observable length does not match state");
  return probabilities(state).dot(obs.values());
}

template <typename Scalar>
Scalar ground_overlap(const BasicState<Scalar>& state, std::span<const Eigen::Index> ground_set) {
  if (ground_set.empty()) throw RangeError("ground set is empty");
  const RVector<Scalar> probs = probabilities(state);
  Scalar total = 0;
  for (Eigen::Index z : ground_set) {
    if (z < 0 || z >= state.dim()) throw RangeError("ground-set index out of range");
    total += probs[z];
  }
  return total;
}

template <typename Scalar>
Scalar purity(const BasicState<Scalar>& state) {
  if (state.is_pure()) return state.amplitudes().squaredNorm() * state.amplitudes().squaredNorm();
  return (state.density() * state.density()).trace().real();
}

/// Uhlmann fidelity; reduces to |⟨ψ|φ⟩|² and ⟨ψ|ρ|ψ⟩ when either side is pure.
template <typename Scalar>
Scalar fidelity(const BasicState<Scalar>& a, const BasicState<Scalar>& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("fidelity between different qubit counts");
  if (a.is_pure() && b.is_pure()) return std::norm(a.amplitudes().dot(b.amplitudes()));
  if (a.is_pure()) return (a.amplitudes().adjoint() * b.density() * a.amplitudes())(0, 0).real();
  if (b.is_pure()) return fidelity(b, a);
  Eigen::SelfAdjointEigenSolver<CMatrix<Scalar>> es(a.density());
  const RVector<Scalar> ev = es.eigenvalues().cwiseMax(Scalar(0)).cwiseSqrt();
  const CMatrix<Scalar> sqrt_a = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix<Scalar>> inner(sqrt_a * b.density() * sqrt_a);
  const Scalar root = inner.eigenvalues().cwiseMax(Scalar(0)).cwiseSqrt().sum();
  return root * root;
}

/// Checks the state invariants: unit norm (pure), or unit trace, Hermiticity and
/// positivity (mixed).
template <typename Scalar>
bool is_physical(const BasicState<Scalar>& state) {
  if (state.is_pure()) {
    return std::abs(state.amplitudes().squaredNorm() - Scalar(1)) <= Tolerances::norm;
  }
  const auto& rho = state.density();
  if (std::abs(rho.trace() - std::complex<Scalar>(1)) > Tolerances::norm) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > Tolerances::hermitian) return false;
  Eigen::SelfAdjointEigenSolver<CMatrix<Scalar>> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= Tolerances::min_eigenvalue;
}

/// Relabels qubits: qubit `from[q]` of the input becomes qubit q of the output.
template <typename Scalar>
BasicState<Scalar> permute_qubits(const BasicState<Scalar>& state, std::span<const int> from) {
  const int n = state.n_qubits();
  if (static_cast<int>(from.size()) != n) throw DimensionError("permutation length must equal N");
  detail::check_targets(from, n);
  const Eigen::Index dim = state.dim();
  std::vector<Eigen::Index> map(static_cast<std::size_t>(dim));
  for (Eigen::Index z = 0; z < dim; ++z) {
    Eigen::Index src = 0;
    for (int q = 0; q < n; ++q) {
      if ((z >> q) & 1) src |= Eigen::Index{1} << from[static_cast<std::size_t>(q)];
    }
    map[static_cast<std::size_t>(z)] = src;
  }
  if (state.is_pure()) {
    CVector<Scalar> out(dim);
    for (Eigen::Index z = 0; z < dim; ++z) out[z] = state.amplitudes()[map[static_cast<std::size_t>(z)]];
    return BasicState<Scalar>::pure(n, std::move(out));
  }
  CMatrix<Scalar> out(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      out(i, j) = state.density()(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
    }
  }
  return BasicState<Scalar>::mixed(n, std::move(out));
}

}  // namespace famq
