// Copyright 2026 The embedsim Authors
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

#include "embedsim/state.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace embedsim {

int qubits_for_dimension(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw InvalidArgument("dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

PureState::PureState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)), num_qubits_(qubits_for_dimension(amplitudes_.size())) {
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "pure state is not normalized (norm = " << norm << ")";
    throw InvalidArgument(msg.str());
  }
}

PureState PureState::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("cannot normalize a zero or non-finite vector");
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

MixedState::MixedState(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)), num_qubits_(qubits_for_dimension(matrix_.rows())) {
  if (matrix_.rows() != matrix_.cols()) throw InvalidArgument("density matrix must be square");
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTolerance) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw InvalidArgument("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdSlack) {
    throw InvalidArgument("density matrix is not positive semidefinite");
  }
}

MixedState MixedState::from_pure(const PureState& psi) {
  Eigen::MatrixXcd rho = psi.amplitudes() * psi.amplitudes().adjoint();
  // Exact Hermitian symmetrization; the outer product is Hermitian up to roundoff.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return MixedState(std::move(rho));
}

namespace states {

PureState bell() { return ghz(2); }

PureState ghz(int num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("GHZ state needs at least one qubit");
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  a[0] = a[dim - 1] = 1.0;
  return PureState::normalized(std::move(a));
}

PureState w(int num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("W state needs at least one qubit");
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  for (int q = 0; q < num_qubits; ++q) a[Eigen::Index{1} << q] = 1.0;
  return PureState::normalized(std::move(a));
}

PureState zero(int num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("zero state needs at least one qubit");
  return PureState(Eigen::VectorXcd::Unit(Eigen::Index{1} << num_qubits, 0));
}

MixedState werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("Werner parameter must lie in [0, 1]");
  const Eigen::VectorXcd phi = bell().amplitudes();
  Eigen::MatrixXcd rho = p * phi * phi.adjoint() + (1.0 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0;
  return MixedState(std::move(rho));
}

}  // namespace states

}  // namespace embedsim
