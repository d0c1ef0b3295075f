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

#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/// Largest imaginary component tolerated when a complex vector is accepted
/// as an enlarged-space state.
inline constexpr double kRealityTolerance = 1e-10;

/// Real amplitude vector over N+1 qubits. The ancilla is qubit 0: the upper
/// half holds Re(psi), the lower half Im(psi).
class EnlargedState {
 public:
  explicit EnlargedState(Eigen::VectorXd amplitudes);

  /// Accepts a complex vector whose imaginary part is below
  /// kRealityTolerance and drops it; throws NumericalIntegrityError otherwise.
  static EnlargedState from_complex(const Eigen::VectorXcd& amplitudes);

  int simulated_qubits() const { return simulated_qubits_; }
  int num_qubits() const { return simulated_qubits_ + 1; }
  const Eigen::VectorXd& amplitudes() const { return amplitudes_; }

  auto real_block() const { return amplitudes_.head(amplitudes_.size() / 2); }
  auto imag_block() const { return amplitudes_.tail(amplitudes_.size() / 2); }

 private:
  Eigen::VectorXd amplitudes_;
  int simulated_qubits_;
};

/// Enlarged-space generator. Every term has odd Y-parity, so the dense form
/// is purely imaginary and Hermitian.
class EmbeddedHamiltonian {
 public:
  explicit EmbeddedHamiltonian(PauliSum op);

  const PauliSum& op() const { return op_; }
  int simulated_qubits() const { return op_.num_qubits() - 1; }

 private:
  PauliSum op_;
};

/// H = A + iB. `symmetric` holds the even-parity terms (A, real symmetric);
/// `imaginary` holds the odd-parity terms, whose dense form is iB with B
/// real antisymmetric. Both keep real Pauli coefficients.
struct HamiltonianSplit {
  PauliSum symmetric;
  PauliSum imaginary;

  Eigen::MatrixXd dense_a() const;
  Eigen::MatrixXd dense_b() const;
};

/// Sigma_z ⊗ O and sigma_x ⊗ O; the antilinear expectation <psi|O K|psi>
/// equals <z_part> - i <x_part> on the embedded state.
struct ObservablePair {
  PauliSum z_part;
  PauliSum x_part;
};

EnlargedState embed_state(const PureState& psi);

/// Applies M = (1, i) ⊗ I. Throws NumericalIntegrityError when the result
/// is not normalized to within 1e-10, which means the input was not a
/// valid image of a simulated state.
PureState unembed_state(const EnlargedState& enlarged);

/// The conjugation gate sigma_z ⊗ I over N+1 qubits.
PauliSum conjugation_gate(int simulated_qubits);

/// Applies the conjugation gate directly on amplitudes (negates the lower half).
EnlargedState apply_conjugation(const EnlargedState& enlarged);

HamiltonianSplit split_hamiltonian(const PauliSum& h);

/// Even-parity c·P maps to -c·(Y ⊗ P); odd-parity c·P maps to c·(I ⊗ P).
EmbeddedHamiltonian embed_hamiltonian(const PauliSum& h);

ObservablePair embed_observable(const PauliSum& o);

/// Dense M = [I | iI], 2^N x 2^(N+1).
Eigen::MatrixXcd dense_inverse_map(int simulated_qubits);

}  // namespace embedsim
