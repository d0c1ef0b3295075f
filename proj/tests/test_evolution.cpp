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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <numbers>

#include "embedsim/evolution.hpp"
#include "test_support.hpp"

using namespace embedsim;
using embedsim::oracle::C;

namespace {

// Least-squares slope of log(error) against log(steps).
double loglog_slope(const std::vector<int>& steps, const std::vector<double>& errors) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double x = std::log(static_cast<double>(steps[i]));
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Closed-form exp(-iHt) from the dense oracle via the Hermitian eigenbasis,
// computed independently of ExactPropagator.
Eigen::VectorXcd reference_evolution(const PauliSum& h, const Eigen::VectorXcd& s, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(oracle::dense_oracle(h));
  const Eigen::VectorXcd phases = (solver.eigenvalues() * C(0, -t)).array().exp().matrix();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint() * s;
}

}  // namespace

TEST(EvolveExact, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(1);
  const PauliSum h = oracle::random_pauli_sum(3, 5, rng);
  const Eigen::VectorXcd s = oracle::random_state(3, rng).amplitudes();
  EXPECT_LT((evolve_exact(s, h, 0.0) - s).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(EvolveExact, SigmaZRotatesPlusIntoMinus) {
  Eigen::VectorXcd plus(2), minus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  minus << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  const Eigen::VectorXcd out = evolve_exact(plus, PauliSum(1.0, PauliString("Z")), std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(minus.dot(out)), 1.0, 1e-14);
}

TEST(EvolveExact, MatchesIndependentPropagatorAndComposes) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const PauliSum h = oracle::random_pauli_sum(n, 4, rng);
    const Eigen::VectorXcd s = oracle::random_state(n, rng).amplitudes();
    const ExactPropagator u(h);
    EXPECT_LT((u.apply(s, 0.7) - reference_evolution(h, s, 0.7)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((u.apply(u.apply(s, 0.4), 0.9) - u.apply(s, 1.3)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(u.apply(s, 2.5).norm(), 1.0, 1e-10);
    const Eigen::MatrixXcd unitary = u.unitary(1.1);
    EXPECT_LT((unitary * s - u.apply(s, 1.1)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(EvolveExact, RefusesOversizedSystems) {
  EXPECT_THROW(ExactPropagator(PauliSum(1.0, PauliString::identity(14))), CapacityError);
}

TEST(EvolveEnlarged, CommutingDiagram) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const PauliSum h = oracle::random_pauli_sum(n, 1 + trial % 5, rng);
    const PureState psi0 = oracle::random_state(n, rng);
    std::uniform_real_distribution<double> time(0.0, 3.0);
    const double t = time(rng);
    const EnlargedState evolved = evolve(embed_state(psi0), embed_hamiltonian(h), t, EvolutionPlan{});
    const PureState direct = evolve(psi0, h, t, EvolutionPlan{});
    EXPECT_LT((unembed_state(evolved).amplitudes() - direct.amplitudes()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(EvolveTrotter, CommutingTermsAreExact) {
  std::mt19937_64 rng(4);
  const PauliSum h(2, {{0.7, PauliString("ZI")}, {-1.3, PauliString("IZ")}});
  const Eigen::VectorXcd s = oracle::random_state(2, rng).amplitudes();
  const Eigen::VectorXcd exact = evolve_exact(s, h, 1.9);
  for (int steps : {1, 3, 10}) {
    EXPECT_LT((evolve_trotter(s, h, 1.9, steps, 1) - exact).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((evolve_trotter(s, h, 1.9, steps, 2) - exact).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(EvolveTrotter, ErrorScalesWithOrder) {
  const PauliSum h(1, {{1.0, PauliString("X")}, {1.0, PauliString("Z")}});
  const Eigen::VectorXcd s = Eigen::VectorXcd::Unit(2, 0);
  const Eigen::VectorXcd exact = evolve_exact(s, h, 1.0);
  const std::vector<int> steps{8, 16, 32, 64};
  std::vector<double> err1, err2;
  for (int n : steps) {
    err1.push_back((evolve_trotter(s, h, 1.0, n, 1) - exact).norm());
    err2.push_back((evolve_trotter(s, h, 1.0, n, 2) - exact).norm());
  }
  EXPECT_NEAR(loglog_slope(steps, err1), -1.0, 0.15);
  EXPECT_NEAR(loglog_slope(steps, err2), -2.0, 0.2);
}

TEST(EvolveTrotter, ManyStepsConvergeToExact) {
  std::mt19937_64 rng(5);
  const PauliSum h = oracle::random_pauli_sum(2, 5, rng);
  const Eigen::VectorXcd s = oracle::random_state(2, rng).amplitudes();
  const Eigen::VectorXcd exact = evolve_exact(s, h, 1.0);
  EXPECT_LT((evolve_trotter(s, h, 1.0, 4096, 2) - exact).norm(), 1e-5);
  // First order is held to its leading-order commutator bound t^2/(2n) * sum_{j<k} ||[H_j, H_k]||.
  double commutator_sum = 0.0;
  const auto& terms = h.terms();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    for (std::size_t k = j + 1; k < terms.size(); ++k) {
      const Eigen::MatrixXcd a = terms[j].coeff * oracle::kron_oracle(terms[j].pauli.str());
      const Eigen::MatrixXcd b = terms[k].coeff * oracle::kron_oracle(terms[k].pauli.str());
      commutator_sum += (a * b - b * a).operatorNorm();
    }
  }
  EXPECT_LT((evolve_trotter(s, h, 1.0, 4096, 1) - exact).norm(), commutator_sum / (2.0 * 4096) * 1.01);
}

TEST(EvolveTrotter, ArgumentChecks) {
  const PauliSum h(1.0, PauliString("X"));
  const Eigen::VectorXcd s = Eigen::VectorXcd::Unit(2, 0);
  EXPECT_THROW(evolve_trotter(s, h, 1.0, 0, 1), InvalidArgument);
  EXPECT_THROW(evolve_trotter(s, h, 1.0, 4, 3), InvalidArgument);
  EXPECT_THROW((EvolutionPlan{Method::Trotter1, 0}.validate()), InvalidArgument);
}

TEST(EvolveTrotter, RealPathMatchesComplexPath) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const EmbeddedHamiltonian ht = embed_hamiltonian(oracle::random_pauli_sum(n, 4, rng));
    const Eigen::VectorXd s = embed_state(oracle::random_state(n, rng)).amplitudes();
    for (int order : {1, 2}) {
      const Eigen::VectorXcd complex_path = evolve_trotter(s.cast<C>(), ht.op(), 0.8, 16, order);
      EXPECT_LT(reality_residual(complex_path), 1e-12);
      EXPECT_LT((evolve_trotter_real(s, ht, 0.8, 16, order) - complex_path.real()).cwiseAbs().maxCoeff(), 1e-13);
    }
  }
}

TEST(EvolveTrotter, EnlargedTrotterTracksDirectTrotter) {
  // Each term intertwines with M individually, so the product formulas agree too.
  std::mt19937_64 rng(7);
  const PauliSum h = oracle::random_pauli_sum(2, 4, rng);
  const PureState psi0 = oracle::random_state(2, rng);
  for (Method m : {Method::Trotter1, Method::Trotter2}) {
    const EvolutionPlan plan{m, 12};
    const PureState direct = evolve(psi0, h, 1.5, plan);
    const EnlargedState enlarged = evolve(embed_state(psi0), embed_hamiltonian(h), 1.5, plan);
    EXPECT_LT((unembed_state(enlarged).amplitudes() - direct.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(RealityResidual, ExactAndTrotterPaths) {
  std::mt19937_64 rng(8);
  const Eigen::VectorXd real_start = embed_state(oracle::random_state(2, rng)).amplitudes();
  const EmbeddedHamiltonian ht = embed_hamiltonian(oracle::random_pauli_sum(2, 5, rng));
  EXPECT_EQ(reality_residual(evolve_exact(real_start.cast<C>(), ht.op(), 0.0)), 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    const EmbeddedHamiltonian g = embed_hamiltonian(oracle::random_pauli_sum(1 + trial % 3, 4, rng));
    const Eigen::VectorXd v = embed_state(oracle::random_state(1 + trial % 3, rng)).amplitudes();
    EXPECT_LT(reality_residual(evolve_exact(v.cast<C>(), g.op(), 1.0)), 1e-12);
  }
  EXPECT_LT(reality_residual(evolve_trotter(real_start.cast<C>(), ht.op(), 1.0, 64, 1)), 1e-12);
  Eigen::VectorXcd bad = real_start.cast<C>();
  bad[0] += C(0, 1e-6);
  EXPECT_THROW(require_real(bad), NumericalIntegrityError);
}
