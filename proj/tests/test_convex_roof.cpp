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

#include "embedsim/convex_roof.hpp"
#include "test_support.hpp"

using namespace embedsim;
using embedsim::oracle::C;

namespace {

MixedState bell_diagonal_rank2(double p) {
  const Eigen::VectorXcd phi_plus = states::bell().amplitudes();
  Eigen::VectorXcd phi_minus = phi_plus;
  phi_minus[3] = -phi_minus[3];
  return MixedState(p * phi_plus * phi_plus.adjoint() + (1 - p) * phi_minus * phi_minus.adjoint());
}

Eigen::MatrixXcd random_isometry(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  Eigen::MatrixXcd a(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) a.col(c) = oracle::random_vector(rows, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
}

MixedState separable_mixture(int members, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  double total = 0.0;
  for (int i = 0; i < members; ++i) {
    const double w = u(rng);
    const Eigen::VectorXcd v = oracle::random_product_state(2, rng).amplitudes();
    rho += w * v * v.adjoint();
    total += w;
  }
  rho /= total;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return MixedState(rho);
}

void expect_valid(const Decomposition& d, const MixedState& rho) {
  double total = 0.0;
  for (const auto& m : d.members()) {
    EXPECT_GT(m.probability, 0.0);
    EXPECT_LE(m.probability, 1.0);
    EXPECT_NEAR(m.state.amplitudes().norm(), 1.0, 1e-12);
    total += m.probability;
  }
  EXPECT_NEAR(total, 1.0, 1e-10);
  EXPECT_LT(d.reconstruction_error(rho), 1e-8);
}

}  // namespace

TEST(Decomposition, RejectsInvalidProbabilities) {
  EXPECT_THROW(Decomposition({{0.5, states::bell()}}), InvalidArgument);
  EXPECT_THROW(Decomposition({{0.0, states::bell()}, {1.0, states::zero(2)}}), InvalidArgument);
  EXPECT_THROW(Decomposition({{1.2, states::bell()}, {-0.2, states::zero(2)}}), InvalidArgument);
  EXPECT_NO_THROW(Decomposition({{0.25, states::bell()}, {0.75, states::zero(2)}}));
}

TEST(EigendecompositionStart, PureState) {
  std::mt19937_64 rng(50);
  const PureState psi = oracle::random_state(2, rng);
  const MixedState rho = MixedState::from_pure(psi);
  const Decomposition d = eigendecomposition_start(rho);
  ASSERT_EQ(d.size(), 1U);
  EXPECT_NEAR(d.members()[0].probability, 1.0, 1e-12);
  EXPECT_NEAR(std::abs(d.members()[0].state.amplitudes().dot(psi.amplitudes())), 1.0, 1e-12);
}

TEST(EigendecompositionStart, MaximallyMixed) {
  const MixedState rho(Eigen::MatrixXcd::Identity(4, 4) / 4.0);
  const Decomposition d = eigendecomposition_start(rho);
  ASSERT_EQ(d.size(), 4U);
  for (const auto& m : d.members()) EXPECT_NEAR(m.probability, 0.25, 1e-12);
  expect_valid(d, rho);
}

TEST(EigendecompositionStart, RandomRankTwo) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const MixedState rho = oracle::random_mixed_state(2, 2, rng);
    const Decomposition d = eigendecomposition_start(rho);
    ASSERT_EQ(d.size(), 2U);
    EXPECT_GE(d.members()[0].probability, d.members()[1].probability);
    EXPECT_LT(d.reconstruction_error(rho), 1e-10);
  }
}

TEST(DecompositionFromIsometry, IdentityRecoversSpectralEnsemble) {
  std::mt19937_64 rng(52);
  const MixedState rho = oracle::random_mixed_state(2, 3, rng);
  const Decomposition start = eigendecomposition_start(rho);
  const Decomposition steered = decomposition_from_isometry(rho, Eigen::MatrixXcd::Identity(3, 3));
  ASSERT_EQ(steered.size(), start.size());
  for (std::size_t i = 0; i < start.size(); ++i) {
    EXPECT_NEAR(steered.members()[i].probability, start.members()[i].probability, 1e-14);
    EXPECT_LT((steered.members()[i].state.amplitudes() - start.members()[i].state.amplitudes()).norm(), 1e-14);
  }
}

TEST(DecompositionFromIsometry, RotationOnBellDiagonal) {
  const MixedState rho = bell_diagonal_rank2(0.7);
  const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
  Eigen::MatrixXcd w(2, 2);
  w << c, -s, s, c;
  const Decomposition d = decomposition_from_isometry(rho, w);
  ASSERT_EQ(d.size(), 2U);
  // Direct reconstruction from the members, independent of the library's helper.
  Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(4, 4);
  for (const auto& m : d.members()) rebuilt += m.probability * m.state.amplitudes() * m.state.amplitudes().adjoint();
  EXPECT_LT((rebuilt - rho.matrix()).norm(), 1e-10);
}

TEST(DecompositionFromIsometry, RandomTallIsometry) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + trial % 4;
    const MixedState rho = oracle::random_mixed_state(2, r, rng);
    const Decomposition d = decomposition_from_isometry(rho, random_isometry(r + 1, r, rng));
    EXPECT_EQ(d.size(), static_cast<std::size_t>(r + 1));
    expect_valid(d, rho);
  }
}

TEST(DecompositionFromIsometry, RejectsNonIsometry) {
  std::mt19937_64 rng(54);
  const MixedState rho = oracle::random_mixed_state(2, 2, rng);
  EXPECT_THROW(decomposition_from_isometry(rho, 2.0 * Eigen::MatrixXcd::Identity(2, 2)), InvalidArgument);
  EXPECT_THROW(decomposition_from_isometry(rho, Eigen::MatrixXcd::Identity(3, 3)), InvalidArgument);
  Eigen::MatrixXcd skew = Eigen::MatrixXcd::Identity(3, 2);
  skew(2, 0) = 1e-3;
  EXPECT_THROW(decomposition_from_isometry(rho, skew), InvalidArgument);
}

TEST(RoofObjective, ReferenceCases) {
  const MixedState bell = MixedState::from_pure(states::bell());
  EXPECT_NEAR(roof_objective(eigendecomposition_start(bell), monotone_specs::concurrence()), 1.0, 1e-12);

  std::mt19937_64 rng(55);
  const PureState psi = oracle::random_state(2, rng);
  EXPECT_NEAR(roof_objective(Decomposition({{1.0, psi}}), monotone_specs::concurrence()),
              oracle::concurrence_oracle(psi.amplitudes()), 1e-10);

  std::vector<DecompositionMember> products;
  for (int i = 0; i < 4; ++i) products.push_back({0.25, oracle::random_product_state(2, rng)});
  EXPECT_NEAR(roof_objective(Decomposition(products), monotone_specs::concurrence()), 0.0, 1e-12);

  const MixedState werner = states::werner(0.9);
  EXPECT_GE(roof_objective(eigendecomposition_start(werner), monotone_specs::concurrence()),
            oracle::wootters_concurrence_oracle(werner.matrix()) - 1e-9);
}

TEST(RoofObjective, ShotInjection) {
  const Decomposition d = eigendecomposition_start(states::werner(0.8));
  const ShotPlan plan{20000, 4};
  const double a = roof_objective(d, monotone_specs::concurrence(), plan);
  EXPECT_EQ(a, roof_objective(d, monotone_specs::concurrence(), plan));
  EXPECT_NEAR(a, roof_objective(d, monotone_specs::concurrence()), 0.05);
}

TEST(WoottersOracle, ReferenceValues) {
  EXPECT_NEAR(wootters_oracle(MixedState::from_pure(states::bell())), 1.0, 1e-12);
  EXPECT_NEAR(wootters_oracle(MixedState(Eigen::MatrixXcd::Identity(4, 4) / 4.0)), 0.0, 1e-12);
  EXPECT_NEAR(wootters_oracle(states::werner(2.0 / 3.0)), 0.5, 1e-12);
  EXPECT_THROW(wootters_oracle(MixedState::from_pure(states::ghz(3))), InvalidArgument);
}

TEST(WoottersOracle, AgreesWithIndependentFormula) {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 50; ++trial) {
    const MixedState rho = oracle::random_mixed_state(2, 1 + trial % 4, rng);
    EXPECT_NEAR(wootters_oracle(rho), oracle::wootters_concurrence_oracle(rho.matrix()), 1e-7);
  }
  for (double p = 0.0; p <= 1.0; p += 0.125) {
    EXPECT_NEAR(wootters_oracle(states::werner(p)), std::max(0.0, (3 * p - 1) / 2), 1e-10) << p;
  }
}

TEST(EfficiencyCheck, Arithmetic) {
  EXPECT_FALSE(efficiency_check(2, 50, 2, 2));
  EXPECT_TRUE(efficiency_check(2, 100, 2, 6));
  EXPECT_FALSE(efficiency_check(1, 1, tomography_baseline(3), 3));
  EXPECT_TRUE(efficiency_check(1, 1, tomography_baseline(3) - 1, 3));
  // Products far beyond 64 bits are simply not efficient.
  EXPECT_FALSE(efficiency_check(1ULL << 40, 1ULL << 40, 1ULL << 40, 31));
}

TEST(RoofConfig, Validation) {
  EXPECT_NO_THROW(RoofConfig{}.validate());
  RoofConfig bad;
  bad.restarts = 0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = RoofConfig{};
  bad.max_iterations = 0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = RoofConfig{};
  bad.extra_terms = -1;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = RoofConfig{};
  bad.extra_terms = 20;
  EXPECT_THROW(convex_roof_estimate(states::werner(0.5), monotone_specs::concurrence(), bad), InvalidArgument);
  EXPECT_THROW(convex_roof_estimate(states::werner(0.5), monotone_specs::three_tangle(), RoofConfig{}),
               InvalidArgument);
}

TEST(ConvexRoof, PureInputNeedsNoIterations) {
  const auto r = convex_roof_estimate(MixedState::from_pure(states::bell()), monotone_specs::concurrence(), RoofConfig{});
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_TRUE(r.converged);
}

TEST(ConvexRoof, WernerStates) {
  for (double p : {0.5, 0.8, 1.0}) {
    const auto r = convex_roof_estimate(states::werner(p), monotone_specs::concurrence(), RoofConfig{});
    EXPECT_NEAR(r.value, std::max(0.0, (3 * p - 1) / 2), 1e-3) << p;
    expect_valid(r.best, states::werner(p));
  }
}

TEST(ConvexRoof, RandomRankTwoMatchesOracleAndBoundsIt) {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    const MixedState rho = oracle::random_mixed_state(2, 2, rng);
    const double exact = oracle::wootters_concurrence_oracle(rho.matrix());
    RoofConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto r = convex_roof_estimate(rho, monotone_specs::concurrence(), cfg);
    EXPECT_NEAR(r.value, exact, 1e-3) << trial;
    EXPECT_GE(r.value, exact - 1e-9) << trial;
    expect_valid(r.best, rho);
  }
}

TEST(ConvexRoof, TrajectoriesAreNonincreasing) {
  std::mt19937_64 rng(58);
  const MixedState rho = oracle::random_mixed_state(2, 3, rng);
  RoofConfig cfg;
  cfg.restarts = 4;
  const auto r = convex_roof_estimate(rho, monotone_specs::concurrence(), cfg);
  ASSERT_EQ(r.trajectories.size(), 4U);
  for (const auto& t : r.trajectories) {
    ASSERT_FALSE(t.empty());
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LE(t[i], t[i - 1]);
  }
  EXPECT_EQ(r.value, r.trajectories[static_cast<std::size_t>(r.restart)].back());
  for (const auto& t : r.trajectories) EXPECT_GE(t.back(), r.value);
}

TEST(ConvexRoof, BudgetExhaustionIsFlagged) {
  RoofConfig cfg;
  cfg.max_iterations = 2;
  cfg.restarts = 2;
  const auto r = convex_roof_estimate(states::werner(0.8), monotone_specs::concurrence(), cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 2);
  EXPECT_GE(r.value, 0.7 - 1e-9);
}

TEST(ConvexRoof, DeterministicForFixedSeed) {
  std::mt19937_64 rng(59);
  const MixedState rho = oracle::random_mixed_state(2, 2, rng);
  RoofConfig cfg;
  cfg.restarts = 3;
  cfg.seed = 1234;
  const auto a = convex_roof_estimate(rho, monotone_specs::concurrence(), cfg);
  const auto b = convex_roof_estimate(rho, monotone_specs::concurrence(), cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.restart, b.restart);
  EXPECT_EQ(a.trajectories, b.trajectories);
}

TEST(ConvexRoof, SeparableMixturesReachZero) {
  std::mt19937_64 rng(60);
  for (int trial = 0; trial < 6; ++trial) {
    const MixedState rho = separable_mixture(3 + trial % 3, rng);
    const auto r = convex_roof_estimate(rho, monotone_specs::concurrence(), RoofConfig{});
    EXPECT_LT(r.value, 1e-2) << trial;
    EXPECT_NEAR(oracle::wootters_concurrence_oracle(rho.matrix()), 0.0, 1e-7);
  }
}

TEST(ConvexRoof, ShotNoiseInjection) {
  RoofConfig cfg;
  cfg.restarts = 2;
  cfg.max_iterations = 30;
  cfg.shots = ShotPlan{20000, 9};
  const auto noisy = convex_roof_estimate(states::werner(0.8), monotone_specs::concurrence(), cfg);
  const auto again = convex_roof_estimate(states::werner(0.8), monotone_specs::concurrence(), cfg);
  EXPECT_EQ(noisy.value, again.value);
  EXPECT_NEAR(noisy.value, 0.7, 0.1);
}
