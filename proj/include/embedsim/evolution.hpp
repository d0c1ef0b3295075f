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

#pragma once

#include <Eigen/Core>

#include "embedsim/embedding.hpp"
#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

enum class Method { Exact, Trotter1, Trotter2 };

/// How to reach time t under a fixed Hamiltonian (hbar = 1).
struct EvolutionPlan {
  Method method = Method::Exact;
  int steps = 1;

  void validate() const;
};

/// exp(-iHt) from a cached Hermitian eigendecomposition of dense(H). Read-only
/// after construction, so one instance can serve many times and threads.
class ExactPropagator {
 public:
  explicit ExactPropagator(const PauliSum& h);

  int num_qubits() const { return num_qubits_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& s, double t) const;
  Eigen::MatrixXcd unitary(double t) const;

 private:
  int num_qubits_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

Eigen::VectorXcd evolve_exact(const Eigen::VectorXcd& s, const PauliSum& h, double t);

/// Product-formula evolution: `steps` repetitions of the per-term sequence
/// exp(-i c_j P_j dt) in stored term order (order 1), or its palindromic
/// half-step version (order 2). Each factor uses cos(θ) I - i sin(θ) P.
Eigen::VectorXcd evolve_trotter(const Eigen::VectorXcd& s, const PauliSum& h, double t,
                                int steps, int order);

/// Same product formula in real arithmetic for an enlarged-space generator:
/// each factor is the rotation cos(θ) I + sin(θ) R with R = -iP real.
Eigen::VectorXd evolve_trotter_real(const Eigen::VectorXd& s, const EmbeddedHamiltonian& h,
                                    double t, int steps, int order);

/// Largest |Im| component of a vector produced by an enlarged-space propagator.
double reality_residual(const Eigen::VectorXcd& s);

/// Drops the imaginary part after checking reality_residual < 1e-10;
/// throws NumericalIntegrityError otherwise.
Eigen::VectorXd require_real(const Eigen::VectorXcd& s);

PureState evolve(const PureState& psi, const PauliSum& h, double t, const EvolutionPlan& plan);
EnlargedState evolve(const EnlargedState& psi, const EmbeddedHamiltonian& h, double t,
                     const EvolutionPlan& plan);

}  // namespace embedsim
