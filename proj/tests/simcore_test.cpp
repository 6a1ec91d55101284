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

#include "famq/simcore.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "famq/channels.hpp"
#include "test_util.hpp"

namespace famq {
namespace {

using std::numbers::pi;
using testing::expm;

DiagonalObservable k2_diagonal() { return DiagonalObservable(Eigen::Vector4d(0, -1, -1, 0)); }

MatrixXc cz() {
  MatrixXc m = MatrixXc::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

TEST(PlusState, Amplitudes) {
  const auto one = plus_state(1);
  EXPECT_NEAR(one.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(one.amplitudes()[1].real(), 1 / std::sqrt(2.0), 1e-12);
  const auto two = plus_state(2);
  for (auto a : two.amplitudes()) EXPECT_NEAR(std::abs(a - Complex(0.5)), 0.0, 1e-12);
  EXPECT_NEAR(plus_state(7).amplitudes().norm(), 1.0, 1e-12);
}

TEST(PlusState, RejectsOutOfRange) {
  EXPECT_THROW(plus_state(0), SizeError);
  EXPECT_THROW(plus_state(9), SizeError);
}

TEST(DiagonalPhase, ZeroGammaIsBitwiseIdentity) {
  std::mt19937_64 rng(1);
  const auto psi = QuantumState::pure(2, testing::random_state(2, rng));
  const auto out = apply_diagonal_phase(psi, k2_diagonal(), 0.0);
  EXPECT_EQ(out.amplitudes(), psi.amplitudes());
}

TEST(DiagonalPhase, K2AtPiMatchesMatrixExponential) {
  const auto out = apply_diagonal_phase(plus_state(2), k2_diagonal(), pi);
  const Eigen::Vector4cd expected(0.5, -0.5, -0.5, 0.5);
  EXPECT_LT(testing::max_abs(out.amplitudes(), expected), 1e-12);

  MatrixXc h = MatrixXc::Zero(4, 4);
  h.diagonal() = k2_diagonal().values().cast<Complex>();
  const VectorXc oracle = expm(Complex(0, -pi) * h) * plus_state(2).amplitudes();
  EXPECT_LT(testing::max_abs(out.amplitudes(), oracle), 1e-12);
}

TEST(DiagonalPhase, PhasesAdd) {
  const auto obs = DiagonalObservable(Eigen::Vector4d(0.3, -1.2, 2.5, 0.7));
  const auto twice = apply_diagonal_phase(apply_diagonal_phase(plus_state(2), obs, 0.4), obs, 1.1);
  const auto once = apply_diagonal_phase(plus_state(2), obs, 1.5);
  EXPECT_LT(testing::max_abs(twice.amplitudes(), once.amplitudes()), 1e-12);
}

TEST(DiagonalPhase, RejectsDimensionMismatch) {
  EXPECT_THROW(apply_diagonal_phase(plus_state(3), k2_diagonal(), 1.0), DimensionError);
}

TEST(Mixer, XRotationOnZero) {
  MixerRound round{pi / 2, Eigen::VectorXd::Zero(1)};
  const auto out = apply_mixer(basis_state(1, 0), round);
  EXPECT_NEAR(std::abs(out.amplitudes()[0]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitudes()[1] - Complex(0, -1)), 0.0, 1e-12);
}

TEST(Mixer, QuarterTurnAxisIsRealRotation) {
  for (double beta : {0.0, 0.3, 1.7, -2.2}) {
    const Matrix2c m = mixer_matrix(beta, pi / 2);
    Matrix2c closed;
    closed << std::cos(beta), std::sin(beta), -std::sin(beta), std::cos(beta);
    EXPECT_LT((m - closed).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::VectorXd theta(1);
    theta << pi / 2;
    const MatrixXc oracle = expm(Complex(0, -beta) * testing::mixer_hamiltonian(theta));
    EXPECT_LT((MatrixXc(m) - oracle).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Mixer, MatchesDenseExponentialOnRandomAxes) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 4;
    MixerRound round{u(rng), Eigen::VectorXd::NullaryExpr(n, [&] { return u(rng); })};
    const VectorXc psi = testing::random_state(n, rng);
    const auto out = apply_mixer(QuantumState::pure(n, psi), round);
    const VectorXc oracle = expm(Complex(0, -round.beta) * testing::mixer_hamiltonian(round.thetas)) * psi;
    EXPECT_LT(testing::max_abs(out.amplitudes(), oracle), 1e-12);
  }
}

TEST(Mixer, ZeroAxisIsStandardXMixer) {
  std::mt19937_64 rng(3);
  const VectorXc psi = testing::random_state(3, rng);
  const auto out = apply_mixer(QuantumState::pure(3, psi), MixerRound{0.8, Eigen::VectorXd::Zero(3)});
  MatrixXc hx = MatrixXc::Zero(8, 8);
  for (int q = 0; q < 3; ++q) hx += testing::embed(pauli::x(), q, 3);
  EXPECT_LT(testing::max_abs(out.amplitudes(), expm(Complex(0, -0.8) * hx) * psi), 1e-12);
}

TEST(Mixer, QubitOrderIsIrrelevant) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-pi, pi);
  const int n = 4;
  MixerRound round{u(rng), Eigen::VectorXd::NullaryExpr(n, [&] { return u(rng); })};
  auto psi = QuantumState::pure(n, testing::random_state(n, rng));
  const auto all = apply_mixer(psi, round);
  auto sequential = psi;
  for (int q : {2, 0, 3, 1}) {
    sequential = apply_single_qubit(std::move(sequential), mixer_matrix(round.beta, round.thetas[q]), q);
  }
  EXPECT_LT(testing::max_abs(all.amplitudes(), sequential.amplitudes()), 1e-12);
}

TEST(Mixer, RejectsWrongThetaLength) {
  EXPECT_THROW(apply_mixer(plus_state(2), MixerRound{0.1, Eigen::VectorXd::Zero(3)}), DimensionError);
}

TEST(Gate, CzOnOneOne) {
  const auto out = apply_gate(basis_state(2, 3), cz(), {0, 1});
  EXPECT_NEAR(std::abs(out.amplitudes()[3] + 1.0), 0.0, 1e-12);
}

TEST(Gate, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(5);
  const auto psi = QuantumState::pure(3, testing::random_state(3, rng));
  const auto out = apply_gate(psi, MatrixXc(MatrixXc::Identity(4, 4)), {2, 0});
  EXPECT_LT(testing::max_abs(out.amplitudes(), psi.amplitudes()), 1e-15);
}

TEST(Gate, LittleEndianBitConvention) {
  const auto out = apply_gate(basis_state(2, 0), pauli::x(), {0});
  EXPECT_NEAR(std::abs(out.amplitudes()[1] - 1.0), 0.0, 1e-12);
}

TEST(Gate, TwoQubitMatchesKroneckerOracle) {
  std::mt19937_64 rng(9);
  const int n = 3;
  const MatrixXc u = expm(Complex(0, -1) * (MatrixXc::Random(4, 4) + MatrixXc::Random(4, 4).adjoint()).eval());
  const VectorXc psi = testing::random_state(n, rng);
  // targets {2, 0}: local bit 0 is qubit 2, local bit 1 is qubit 0.
  const auto out = apply_gate(QuantumState::pure(n, psi), u, {2, 0});
  VectorXc oracle = VectorXc::Zero(8);
  for (int z = 0; z < 8; ++z) {
    const int lz = ((z >> 2) & 1) | (((z >> 0) & 1) << 1);
    for (int l = 0; l < 4; ++l) {
      int w = z & ~0b101;
      w |= (l & 1) << 2;
      w |= ((l >> 1) & 1);
      oracle[z] += u(lz, l) * psi[w];
    }
  }
  EXPECT_LT(testing::max_abs(out.amplitudes(), oracle), 1e-12);
}

TEST(Gate, RejectsBadTargets) {
  EXPECT_THROW(apply_gate(plus_state(2), cz(), {0, 0}), TargetError);
  EXPECT_THROW(apply_gate(plus_state(2), cz(), {0, 2}), TargetError);
  EXPECT_THROW(apply_gate(plus_state(2), cz(), {0}), DimensionError);
}

TEST(Kraus, DepolarizingZeroIsIdentity) {
  std::mt19937_64 rng(2);
  const auto rho = QuantumState::pure(2, testing::random_state(2, rng)).to_mixed();
  const auto out = apply_kraus(rho, depolarizing(0.0), {1});
  EXPECT_LT((out.density() - rho.density()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Kraus, FullDepolarizationIsMaximallyMixed) {
  std::mt19937_64 rng(4);
  const auto rho = QuantumState::pure(1, testing::random_state(1, rng)).to_mixed();
  const auto out = apply_kraus(rho, depolarizing(1.0), {0});
  EXPECT_LT((out.density() - MatrixXc::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Kraus, FullAmplitudeDampingRelaxes) {
  const auto out = apply_kraus(basis_state(1, 1).to_mixed(), amplitude_damping(1.0), {0});
  EXPECT_NEAR(out.density()(0, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(out.density()(1, 1)), 0.0, 1e-14);
}

TEST(Kraus, SymmetricRelaxationReachesMaximallyMixed) {
  const auto out = apply_kraus(basis_state(1, 1).to_mixed(), generalized_amplitude_damping(1.0, 0.5), {0});
  EXPECT_LT((out.density() - MatrixXc::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Kraus, BuiltInChannelsAreComplete) {
  for (double p : {0.0, 1e-4, 0.3, 1.0}) {
    EXPECT_LT(kraus_completeness_error(depolarizing(p)), 1e-12);
    EXPECT_LT(kraus_completeness_error(amplitude_damping(p)), 1e-12);
    EXPECT_LT(kraus_completeness_error(phase_damping(p)), 1e-12);
    EXPECT_LT(kraus_completeness_error(generalized_amplitude_damping(p, 0.5)), 1e-12);
  }
  EXPECT_LT(kraus_completeness_error(thermal_relaxation(25e-6, 0.5, 10e-3)), 1e-12);
}

TEST(Kraus, ThermalRelaxationCoherenceDecay) {
  // Off-diagonal of |+⟩⟨+| decays as e^{-t/T2}; excited population as e^{-t/T1}.
  const double t = 1e-3, t1 = 0.5, t2 = 10e-3;
  const auto out = apply_kraus(plus_state(1).to_mixed(), thermal_relaxation(t, t1, t2), {0});
  EXPECT_NEAR(std::abs(out.density()(0, 1)), 0.5 * std::exp(-t / t2), 1e-12);
  const auto excited = apply_kraus(basis_state(1, 1).to_mixed(), thermal_relaxation(t, t1, t2), {0});
  EXPECT_NEAR(excited.density()(1, 1).real(), std::exp(-t / t1), 1e-12);
  EXPECT_THROW(thermal_relaxation(t, 1e-3, 10e-3), ChannelError);
}

TEST(Kraus, RejectsIncompleteSetAndPureState) {
  EXPECT_THROW(apply_kraus(plus_state(1).to_mixed(), {0.5 * pauli::identity()}, {0}), ChannelError);
  EXPECT_THROW(apply_kraus(plus_state(1), depolarizing(0.1), {0}), ChannelError);
}

TEST(Kraus, TracePreservedOnRandomStates) {
  std::mt19937_64 rng(13);
  auto rho = QuantumState::pure(3, testing::random_state(3, rng)).to_mixed();
  rho = apply_kraus(std::move(rho), thermal_relaxation(1e-3, 0.5, 10e-3), {1});
  rho = apply_kraus(std::move(rho), depolarizing(0.2), {2});
  EXPECT_TRUE(is_physical(rho));
}

TEST(Expectation, Examples) {
  EXPECT_NEAR(expectation(plus_state(2), k2_diagonal()), -0.5, 1e-12);
  // Oracle: explicit ⟨ψ|D|ψ⟩.
  const VectorXc psi = plus_state(2).amplitudes();
  MatrixXc d = MatrixXc::Zero(4, 4);
  d.diagonal() = k2_diagonal().values().cast<Complex>();
  EXPECT_NEAR((psi.adjoint() * d * psi)(0, 0).real(), -0.5, 1e-12);
  EXPECT_NEAR(expectation(basis_state(2, 1), k2_diagonal()), -1.0, 1e-12);
  EXPECT_NEAR(expectation(plus_state(2), DiagonalObservable(Eigen::Vector4d::Zero())), 0.0, 1e-15);
  EXPECT_NEAR(expectation(plus_state(2).to_mixed(), k2_diagonal()), -0.5, 1e-12);
}

TEST(GroundOverlap, Examples) {
  const std::vector<Eigen::Index> all{0, 1, 2, 3};
  const std::vector<Eigen::Index> cut{1, 2};
  EXPECT_NEAR(ground_overlap(plus_state(2), all), 1.0, 1e-12);
  EXPECT_NEAR(ground_overlap(plus_state(2), cut), 0.5, 1e-12);
  EXPECT_NEAR(ground_overlap(basis_state(2, 2), cut), 1.0, 1e-12);
  EXPECT_THROW(ground_overlap(plus_state(2), std::vector<Eigen::Index>{}), RangeError);
}

TEST(Consistency, PureAndMixedEvolutionAgree) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-pi, pi);
  const int n = 3;
  auto psi = QuantumState::pure(n, testing::random_state(n, rng));
  auto rho = psi.to_mixed();
  const DiagonalObservable obs(Eigen::VectorXd::NullaryExpr(8, [&] { return u(rng); }));
  const MatrixXc a = MatrixXc::Random(4, 4);
  const MatrixXc u4 = expm(Complex(0, -1) * (a + a.adjoint()));
  for (int step = 0; step < 3; ++step) {
    const double gamma = u(rng);
    MixerRound round{u(rng), Eigen::VectorXd::NullaryExpr(n, [&] { return u(rng); })};
    psi = apply_mixer(apply_diagonal_phase(std::move(psi), obs, gamma), round);
    rho = apply_mixer(apply_diagonal_phase(std::move(rho), obs, gamma), round);
    psi = apply_gate(std::move(psi), u4, {1, 2});
    rho = apply_gate(std::move(rho), u4, {1, 2});
  }
  EXPECT_GE(fidelity(psi, rho), 1 - 1e-10);
  EXPECT_TRUE(is_physical(rho));
  EXPECT_NEAR(psi.amplitudes().squaredNorm(), 1.0, 1e-10);
}

TEST(Fidelity, MixedMixedMatchesPureFormula) {
  std::mt19937_64 rng(19);
  const auto a = QuantumState::pure(2, testing::random_state(2, rng));
  const auto b = QuantumState::pure(2, testing::random_state(2, rng));
  EXPECT_NEAR(fidelity(a.to_mixed(), b.to_mixed()), fidelity(a, b), 1e-10);
}

TEST(Permute, RelabelsQubits) {
  // |q0=1, q1=0, q2=0⟩ with from = {2, 0, 1}: output q1 reads input q0.
  const std::vector<int> from{2, 0, 1};
  const auto out = permute_qubits(basis_state(3, 0b001), from);
  EXPECT_NEAR(std::abs(out.amplitudes()[0b010]), 1.0, 1e-15);
  const auto mixed = permute_qubits(basis_state(3, 0b001).to_mixed(), from);
  EXPECT_NEAR(mixed.density()(0b010, 0b010).real(), 1.0, 1e-15);
}

TEST(Precision, FloatScalarInstantiates) {
  const auto psi = plus_state<float>(3);
  const BasicDiagonal<float> obs(RVector<float>::LinSpaced(8, 0.0f, 7.0f));
  const auto out = apply_mixer(apply_diagonal_phase(psi, obs, 0.3f),
                               BasicMixerRound<float>{0.2f, RVector<float>::Constant(3, 0.1f)});
  EXPECT_NEAR(out.amplitudes().squaredNorm(), 1.0f, 1e-5f);
}

}  // namespace
}  // namespace famq
