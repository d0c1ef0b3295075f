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

#include "embedsim/evolution.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace embedsim {

void EvolutionPlan::validate() const {
  if (method != Method::Exact && steps < 1) throw InvalidArgument("Trotter evolution needs steps >= 1");
}

ExactPropagator::ExactPropagator(const PauliSum& h) : num_qubits_(h.num_qubits()) {
  if (num_qubits_ > kDenseQubitCap) {
    throw CapacityError("exact propagator limited to " + std::to_string(kDenseQubitCap) +
                        " qubits; use a Trotter plan for larger systems");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(h));
  if (solver.info() != Eigen::Success) throw NumericalIntegrityError("Hermitian eigensolver failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Eigen::VectorXcd ExactPropagator::apply(const Eigen::VectorXcd& s, double t) const {
  if (s.size() != eigenvectors_.rows()) throw InvalidArgument("state dimension does not match propagator");
  if (!std::isfinite(t)) throw InvalidArgument("evolution time must be finite");
  // The zero-time propagator is the identity exactly; skip the basis round trip.
  if (t == 0.0) return s;
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * s;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) coeffs[j] *= std::polar(1.0, -eigenvalues_[j] * t);
  return eigenvectors_ * coeffs;
}

Eigen::MatrixXcd ExactPropagator::unitary(double t) const {
  Eigen::VectorXcd phases(eigenvalues_.size());
  for (Eigen::Index j = 0; j < phases.size(); ++j) phases[j] = std::polar(1.0, -eigenvalues_[j] * t);
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Eigen::VectorXcd evolve_exact(const Eigen::VectorXcd& s, const PauliSum& h, double t) {
  return ExactPropagator(h).apply(s, t);
}

namespace {

void check_trotter_args(int steps, int order, double t) {
  if (steps < 1) throw InvalidArgument("Trotter evolution needs steps >= 1");
  if (order != 1 && order != 2) throw InvalidArgument("Trotter order must be 1 or 2");
  if (!std::isfinite(t)) throw InvalidArgument("evolution time must be finite");
}

// s <- exp(-i angle P) s
void rotate_complex(const PauliString& p, double angle, Eigen::VectorXcd& s) {
  const Eigen::VectorXcd ps = apply_pauli_string(p, s);
  s = std::cos(angle) * s - Complex(0, std::sin(angle)) * ps;
}

// s <- (cos(angle) I + sin(angle) R) s with R = -iP, P of odd Y-parity.
void rotate_real(const PauliString& p, double angle, Eigen::VectorXd& s) {
  const std::uint64_t xm = p.x_mask();
  const std::uint64_t zm = p.z_mask();
  // -i * i^y = (-1)^((y-1)/2) for odd y.
  const double base = ((p.y_count() - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  const double c = std::cos(angle);
  const double sn = std::sin(angle);
  Eigen::VectorXd out = c * s;
  for (Eigen::Index b = 0; b < s.size(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const double sign = (std::popcount(ub & zm) & 1U) ? -base : base;
    out[static_cast<Eigen::Index>(ub ^ xm)] += sn * sign * s[b];
  }
  s = std::move(out);
}

template <typename Vector, typename Rotate>
Vector product_formula(Vector s, const PauliSum& h, double t, int steps, int order, Rotate rotate) {
  const double dt = t / steps;
  const auto& terms = h.terms();
  for (int step = 0; step < steps; ++step) {
    if (order == 1) {
      for (const auto& term : terms) rotate(term.pauli, term.coeff * dt, s);
    } else {
      for (const auto& term : terms) rotate(term.pauli, term.coeff * dt / 2, s);
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) rotate(it->pauli, it->coeff * dt / 2, s);
    }
  }
  return s;
}

}  // namespace

Eigen::VectorXcd evolve_trotter(const Eigen::VectorXcd& s, const PauliSum& h, double t, int steps,
                                int order) {
  check_trotter_args(steps, order, t);
  detail::checked_dimension(h.num_qubits(), s.size());
  return product_formula(s, h, t, steps, order, rotate_complex);
}

Eigen::VectorXd evolve_trotter_real(const Eigen::VectorXd& s, const EmbeddedHamiltonian& h, double t,
                                    int steps, int order) {
  check_trotter_args(steps, order, t);
  detail::checked_dimension(h.op().num_qubits(), s.size());
  return product_formula(s, h.op(), t, steps, order, rotate_real);
}

double reality_residual(const Eigen::VectorXcd& s) {
  return s.size() == 0 ? 0.0 : s.imag().cwiseAbs().maxCoeff();
}

Eigen::VectorXd require_real(const Eigen::VectorXcd& s) {
  const double residual = reality_residual(s);
  if (residual > kRealityTolerance) {
    std::ostringstream msg;
    msg << "enlarged-space evolution left imaginary residue " << residual;
    throw NumericalIntegrityError(msg.str());
  }
  return s.real();
}

PureState evolve(const PureState& psi, const PauliSum& h, double t, const EvolutionPlan& plan) {
  plan.validate();
  Eigen::VectorXcd out;
  switch (plan.method) {
    case Method::Exact: out = evolve_exact(psi.amplitudes(), h, t); break;
    case Method::Trotter1: out = evolve_trotter(psi.amplitudes(), h, t, plan.steps, 1); break;
    case Method::Trotter2: out = evolve_trotter(psi.amplitudes(), h, t, plan.steps, 2); break;
  }
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > 1e-10) throw NumericalIntegrityError("evolution lost unitarity");
  return PureState::normalized(std::move(out));
}

EnlargedState evolve(const EnlargedState& psi, const EmbeddedHamiltonian& h, double t,
                     const EvolutionPlan& plan) {
  plan.validate();
  switch (plan.method) {
    case Method::Exact:
      return EnlargedState::from_complex(evolve_exact(psi.amplitudes().cast<Complex>(), h.op(), t));
    case Method::Trotter1:
    case Method::Trotter2: {
      Eigen::VectorXd out = evolve_trotter_real(psi.amplitudes(), h, t, plan.steps,
                                                plan.method == Method::Trotter1 ? 1 : 2);
      const double norm = out.norm();
      if (std::abs(norm - 1.0) > 1e-10) throw NumericalIntegrityError("evolution lost unitarity");
      return EnlargedState(out / norm);
    }
  }
  throw InvalidArgument("unknown evolution method");
}

}  // namespace embedsim
