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

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "embedsim/measurement.hpp"
#include "embedsim/monotones.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/// Eigenvalues at or below this are treated as zero when determining rank.
inline constexpr double kRankThreshold = 1e-10;

struct DecompositionMember {
  double probability;
  PureState state;
};

/// Pure-state ensemble {p_i, |psi_i>}.
class Decomposition {
 public:
  explicit Decomposition(std::vector<DecompositionMember> members);

  std::size_t size() const { return members_.size(); }
  const std::vector<DecompositionMember>& members() const { return members_; }

  /// sum_i p_i |psi_i><psi_i|
  Eigen::MatrixXcd density_matrix() const;
  /// Frobenius distance to rho.
  double reconstruction_error(const MixedState& rho) const;

 private:
  std::vector<DecompositionMember> members_;
};

struct RoofConfig {
  /// Extra members beyond rank(rho): k = r + c.
  int extra_terms = 2;
  /// Sweep budget per restart.
  int max_iterations = 500;
  int restarts = 8;
  /// Converged once the coordinate step shrinks below this.
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
  /// When set, each E(psi_i) is estimated from finite shots instead of
  /// exact enlarged-space expectations.
  std::optional<ShotPlan> shots;

  void validate() const;
};

struct RoofResult {
  double value = 0.0;
  Decomposition best;
  int iterations = 0;
  bool converged = false;
  int restart = 0;
  /// Best objective after each sweep, one trajectory per restart.
  std::vector<std::vector<double>> trajectories;
};

/// Spectral ensemble with eigenvalues above kRankThreshold, largest first.
Decomposition eigendecomposition_start(const MixedState& rho);

/// Members |phi_j> = sum_i W_ji sqrt(lambda_i) |e_i>, p_j = ||phi_j||^2, for
/// a k x r isometry W. Members with p_j below 1e-300 are dropped.
Decomposition decomposition_from_isometry(const MixedState& rho, const Eigen::MatrixXcd& w);

/// sum_i p_i E(psi_i), each E evaluated through the embedded path.
double roof_objective(const Decomposition& d, const MonotoneSpec& spec,
                      const std::optional<ShotPlan>& shots = std::nullopt);

/// Upper bound on the convex roof of `spec` at rho: minimizes roof_objective
/// over k x r isometries W = exp(G)[:, :r], G anti-Hermitian, using seeded
/// restarts of a coordinate-wise quadratic-fit search with shrinking steps.
RoofResult convex_roof_estimate(const MixedState& rho, const MonotoneSpec& spec, const RoofConfig& cfg);

/// Two-qubit concurrence max(0, l1 - l2 - l3 - l4), l_i the decreasing
/// square roots of the eigenvalues of rho (Y⊗Y) rho* (Y⊗Y).
double wootters_oracle(const MixedState& rho);

/// k·l·m < 2^{2N} - 1
bool efficiency_check(std::uint64_t k, std::uint64_t l, std::uint64_t m, int num_qubits);

}  // namespace embedsim
