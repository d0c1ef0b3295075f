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

namespace embedsim {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdSlack = 1e-10;

/// Largest qubit count (simulated plus ancilla) for which operators are
/// materialized densely.
inline constexpr int kDenseQubitCap = 13;

/// Qubit count for a 2^N dimensional space; throws if `dim` is not a power
/// of two of at least 2.
int qubits_for_dimension(Eigen::Index dim);

/// Normalized complex amplitude vector over N qubits.
class PureState {
 public:
  explicit PureState(Eigen::VectorXcd amplitudes);

  /// Rescales to unit norm; rejects the zero vector.
  static PureState normalized(Eigen::VectorXcd amplitudes);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
  int num_qubits_;
};

/// Unit-trace positive semidefinite Hermitian matrix over N qubits.
class MixedState {
 public:
  explicit MixedState(Eigen::MatrixXcd matrix);

  static MixedState from_pure(const PureState& psi);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
  int num_qubits_;
};

namespace states {

/// (|00> + |11>)/sqrt(2)
PureState bell();
/// (|0...0> + |1...1>)/sqrt(2)
PureState ghz(int num_qubits);
/// Equal superposition of the single-excitation basis states.
PureState w(int num_qubits);
/// |0...0>
PureState zero(int num_qubits);

/// p |Phi+><Phi+| + (1 - p) I/4
MixedState werner(double p);

}  // namespace states

}  // namespace embedsim
