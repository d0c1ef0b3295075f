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

#include "embedsim/embedding.hpp"

#include <cmath>
#include <sstream>

namespace embedsim {

EnlargedState::EnlargedState(Eigen::VectorXd amplitudes) : amplitudes_(std::move(amplitudes)) {
  const int total = qubits_for_dimension(amplitudes_.size());
  if (total < 2) throw InvalidArgument("enlarged state needs at least one simulated qubit plus the ancilla");
  simulated_qubits_ = total - 1;
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "enlarged state is not normalized (norm = " << norm << ")";
    throw InvalidArgument(msg.str());
  }
}

EnlargedState EnlargedState::from_complex(const Eigen::VectorXcd& amplitudes) {
  const double residual = amplitudes.size() == 0 ? 0.0 : amplitudes.imag().cwiseAbs().maxCoeff();
  if (residual > kRealityTolerance) {
    std::ostringstream msg;
    msg << "enlarged-space vector has imaginary residue " << residual;
    throw NumericalIntegrityError(msg.str());
  }
  Eigen::VectorXd real = amplitudes.real();
  // Roundoff from a unitary propagator can push the norm off by a few ulps.
  const double norm = real.norm();
  if (std::abs(norm - 1.0) > kRealityTolerance) {
    std::ostringstream msg;
    msg << "enlarged-space vector lost normalization (norm = " << norm << ")";
    throw NumericalIntegrityError(msg.str());
  }
  real /= norm;
  return EnlargedState(std::move(real));
}

EmbeddedHamiltonian::EmbeddedHamiltonian(PauliSum op) : op_(std::move(op)) {
  if (op_.num_qubits() < 2) throw InvalidArgument("embedded Hamiltonian needs at least two qubits");
  for (const auto& t : op_.terms()) {
    if (y_parity(t.pauli) != Parity::Odd) {
      throw InvalidArgument("embedded Hamiltonian term '" + t.pauli.str() + "' is not purely imaginary");
    }
  }
}

Eigen::MatrixXd HamiltonianSplit::dense_a() const { return dense_matrix(symmetric).real(); }

Eigen::MatrixXd HamiltonianSplit::dense_b() const { return dense_matrix(imaginary).imag(); }

EnlargedState embed_state(const PureState& psi) {
  const Eigen::Index dim = psi.dim();
  Eigen::VectorXd out(2 * dim);
  out.head(dim) = psi.amplitudes().real();
  out.tail(dim) = psi.amplitudes().imag();
  return EnlargedState(std::move(out));
}

PureState unembed_state(const EnlargedState& enlarged) {
  const Eigen::Index dim = enlarged.amplitudes().size() / 2;
  Eigen::VectorXcd psi(dim);
  psi.real() = enlarged.real_block();
  psi.imag() = enlarged.imag_block();
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "inverse map produced norm " << norm << "; input is not a valid enlarged state";
    throw NumericalIntegrityError(msg.str());
  }
  return PureState(std::move(psi));
}

PauliSum conjugation_gate(int simulated_qubits) {
  return PauliSum(1.0, tensor(Pauli::Z, PauliString::identity(simulated_qubits)));
}

EnlargedState apply_conjugation(const EnlargedState& enlarged) {
  Eigen::VectorXd out = enlarged.amplitudes();
  const Eigen::Index half = out.size() / 2;
  out.tail(half) = -out.tail(half);
  return EnlargedState(std::move(out));
}

HamiltonianSplit split_hamiltonian(const PauliSum& h) {
  std::vector<PauliTerm> even;
  std::vector<PauliTerm> odd;
  for (const auto& t : h.terms()) (y_parity(t.pauli) == Parity::Even ? even : odd).push_back(t);
  return {PauliSum(h.num_qubits(), std::move(even)), PauliSum(h.num_qubits(), std::move(odd))};
}

EmbeddedHamiltonian embed_hamiltonian(const PauliSum& h) {
  std::vector<PauliTerm> terms;
  terms.reserve(h.size());
  for (const auto& t : h.terms()) {
    if (y_parity(t.pauli) == Parity::Even) {
      terms.push_back({-t.coeff, tensor(Pauli::Y, t.pauli)});
    } else {
      terms.push_back({t.coeff, tensor(Pauli::I, t.pauli)});
    }
  }
  return EmbeddedHamiltonian(PauliSum(h.num_qubits() + 1, std::move(terms)));
}

ObservablePair embed_observable(const PauliSum& o) {
  std::vector<PauliTerm> z_terms;
  std::vector<PauliTerm> x_terms;
  for (const auto& t : o.terms()) {
    z_terms.push_back({t.coeff, tensor(Pauli::Z, t.pauli)});
    x_terms.push_back({t.coeff, tensor(Pauli::X, t.pauli)});
  }
  return {PauliSum(o.num_qubits() + 1, std::move(z_terms)), PauliSum(o.num_qubits() + 1, std::move(x_terms))};
}

Eigen::MatrixXcd dense_inverse_map(int simulated_qubits) {
  if (simulated_qubits + 1 > kDenseQubitCap) throw CapacityError("inverse map exceeds dense cap");
  const Eigen::Index dim = Eigen::Index{1} << simulated_qubits;
  Eigen::MatrixXcd m(dim, 2 * dim);
  m.leftCols(dim) = Eigen::MatrixXcd::Identity(dim, dim);
  m.rightCols(dim) = Complex(0, 1) * Eigen::MatrixXcd::Identity(dim, dim);
  return m;
}

}  // namespace embedsim
