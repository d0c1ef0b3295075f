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

#include "embedsim/convex_roof.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>

#include "embedsim/embedding.hpp"

namespace embedsim {

Decomposition::Decomposition(std::vector<DecompositionMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("decomposition needs at least one member");
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.probability > 0.0 && m.probability <= 1.0 + 1e-10)) {
      throw InvalidArgument("decomposition probabilities must lie in (0, 1]");
    }
    if (m.state.num_qubits() != members_.front().state.num_qubits()) {
      throw InvalidArgument("decomposition members act on different qubit counts");
    }
    total += m.probability;
  }
  if (std::abs(total - 1.0) > 1e-10) throw InvalidArgument("decomposition probabilities do not sum to 1");
}

Eigen::MatrixXcd Decomposition::density_matrix() const {
  const Eigen::Index dim = members_.front().state.dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& m : members_) rho += m.probability * m.state.amplitudes() * m.state.amplitudes().adjoint();
  return rho;
}

double Decomposition::reconstruction_error(const MixedState& rho) const {
  return (density_matrix() - rho.matrix()).norm();
}

void RoofConfig::validate() const {
  if (extra_terms < 0) throw InvalidArgument("roof extra_terms must be nonnegative");
  if (max_iterations < 1) throw InvalidArgument("roof max_iterations must be positive");
  if (restarts < 1) throw InvalidArgument("roof restarts must be positive");
  if (!(tolerance > 0.0)) throw InvalidArgument("roof tolerance must be positive");
  if (shots) shots->validate();
}

namespace {

struct Spectrum {
  Eigen::VectorXd values;   // descending, above threshold
  Eigen::MatrixXcd vectors;  // matching columns
};

Spectrum positive_spectrum(const MixedState& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  const Eigen::VectorXd& vals = solver.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = vals.size() - 1; j >= 0; --j) {
    if (vals[j] > kRankThreshold) keep.push_back(j);
  }
  Spectrum out{Eigen::VectorXd(static_cast<Eigen::Index>(keep.size())),
               Eigen::MatrixXcd(rho.dim(), static_cast<Eigen::Index>(keep.size()))};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.values[static_cast<Eigen::Index>(i)] = vals[keep[i]];
    out.vectors.col(static_cast<Eigen::Index>(i)) = solver.eigenvectors().col(keep[i]);
  }
  return out;
}

Decomposition from_scaled_columns(const Eigen::MatrixXcd& phis) {
  // phis: one unnormalized member per column.
  std::vector<DecompositionMember> members;
  double total = 0.0;
  for (Eigen::Index j = 0; j < phis.cols(); ++j) total += phis.col(j).squaredNorm();
  for (Eigen::Index j = 0; j < phis.cols(); ++j) {
    const double p = phis.col(j).squaredNorm();
    if (p < 1e-300) continue;
    members.push_back({p / total, PureState::normalized(phis.col(j))});
  }
  return Decomposition(std::move(members));
}

Decomposition steer(const Spectrum& spectrum, const Eigen::MatrixXcd& w) {
  // Column j of the result is phi_j = sum_i W_ji sqrt(lambda_i) e_i.
  const Eigen::MatrixXcd scaled = spectrum.vectors * spectrum.values.cwiseSqrt().asDiagonal();
  return from_scaled_columns(scaled * w.transpose());
}

// Unitary exp(G) for the anti-Hermitian G encoded by `params` (k^2 reals).
Eigen::MatrixXcd unitary_from_params(const Eigen::VectorXd& params, Eigen::Index k) {
  Eigen::MatrixXcd hermitian = Eigen::MatrixXcd::Zero(k, k);  // G = i * hermitian
  Eigen::Index idx = 0;
  for (Eigen::Index a = 0; a < k; ++a) hermitian(a, a) = params[idx++];
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = a + 1; b < k; ++b) {
      const Complex entry(params[idx], params[idx + 1]);
      idx += 2;
      hermitian(a, b) = entry;
      hermitian(b, a) = std::conj(entry);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  Eigen::VectorXcd phases(k);
  for (Eigen::Index j = 0; j < k; ++j) phases[j] = std::polar(1.0, solver.eigenvalues()[j]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

struct RestartOutcome {
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd params;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trajectory;
};

class RoofSearch {
 public:
  RoofSearch(const Spectrum& spectrum, const MonotoneSpec& spec, const RoofConfig& cfg, Eigen::Index k)
      : spectrum_(spectrum), spec_(spec), cfg_(cfg), k_(k) {}

  Decomposition decomposition(const Eigen::VectorXd& params) const {
    const Eigen::MatrixXcd u = unitary_from_params(params, k_);
    return steer(spectrum_, u.leftCols(spectrum_.values.size()));
  }

  double objective(const Eigen::VectorXd& params, std::uint64_t& evaluations, std::uint64_t stream) const {
    const Decomposition d = decomposition(params);
    std::optional<ShotPlan> shots;
    if (cfg_.shots) shots = ShotPlan{cfg_.shots->shots, derive_subseed(derive_subseed(cfg_.shots->seed, stream), evaluations)};
    ++evaluations;
    return roof_objective(d, spec_, shots);
  }

  RestartOutcome run(int restart) const {
    const Eigen::Index n_params = k_ * k_;
    std::mt19937_64 rng(derive_subseed(cfg_.seed, static_cast<std::uint64_t>(restart)));
    std::normal_distribution<double> normal(0.0, 1.0);
    RestartOutcome out;
    out.params = Eigen::VectorXd(n_params);
    for (Eigen::Index j = 0; j < n_params; ++j) out.params[j] = normal(rng);
    std::uint64_t evaluations = 0;
    const auto stream = static_cast<std::uint64_t>(restart);
    out.value = objective(out.params, evaluations, stream);

    double step = 0.5;
    for (int iter = 0; iter < cfg_.max_iterations; ++iter) {
      out.iterations = iter + 1;
      const double sweep_start = out.value;
      for (Eigen::Index j = 0; j < n_params; ++j) {
        const double center = out.params[j];
        Eigen::VectorXd trial = out.params;
        trial[j] = center + step;
        const double f_plus = objective(trial, evaluations, stream);
        trial[j] = center - step;
        const double f_minus = objective(trial, evaluations, stream);

        double best_x = center;
        double best_f = out.value;
        if (f_plus < best_f) { best_f = f_plus; best_x = center + step; }
        if (f_minus < best_f) { best_f = f_minus; best_x = center - step; }
        // Vertex of the parabola through the three samples, if convex.
        const double curvature = f_plus + f_minus - 2.0 * out.value;
        if (curvature > 0.0) {
          const double offset = std::clamp(0.5 * step * (f_minus - f_plus) / curvature, -2.0 * step, 2.0 * step);
          trial[j] = center + offset;
          const double f_vertex = objective(trial, evaluations, stream);
          if (f_vertex < best_f) { best_f = f_vertex; best_x = center + offset; }
        }
        out.params[j] = best_x;
        out.value = best_f;
      }
      out.trajectory.push_back(out.value);
      if (sweep_start - out.value <= cfg_.tolerance * std::max(1.0, std::abs(out.value))) step *= 0.5;
      if (step < cfg_.tolerance) {
        out.converged = true;
        break;
      }
    }
    return out;
  }

 private:
  const Spectrum& spectrum_;
  const MonotoneSpec& spec_;
  const RoofConfig& cfg_;
  Eigen::Index k_;
};

}  // namespace

Decomposition eigendecomposition_start(const MixedState& rho) {
  const Spectrum spectrum = positive_spectrum(rho);
  return steer(spectrum, Eigen::MatrixXcd::Identity(spectrum.values.size(), spectrum.values.size()));
}

Decomposition decomposition_from_isometry(const MixedState& rho, const Eigen::MatrixXcd& w) {
  const Spectrum spectrum = positive_spectrum(rho);
  const Eigen::Index r = spectrum.values.size();
  if (w.cols() != r) {
    throw InvalidArgument("isometry has " + std::to_string(w.cols()) + " columns, rank is " + std::to_string(r));
  }
  if (w.rows() < r) throw InvalidArgument("isometry needs at least rank(rho) rows");
  if ((w.adjoint() * w - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidArgument("steering matrix columns are not orthonormal");
  }
  return steer(spectrum, w);
}

double roof_objective(const Decomposition& d, const MonotoneSpec& spec, const std::optional<ShotPlan>& shots) {
  double total = 0.0;
  std::uint64_t index = 0;
  for (const auto& m : d.members()) {
    const EnlargedState enlarged = embed_state(m.state);
    double e = 0.0;
    if (shots) {
      e = sample_monotone(enlarged, spec, ShotPlan{shots->shots, derive_subseed(shots->seed, index++)}).estimate;
    } else {
      e = evaluate_embedded(enlarged, spec).value;
    }
    total += m.probability * e;
  }
  return total;
}

RoofResult convex_roof_estimate(const MixedState& rho, const MonotoneSpec& spec, const RoofConfig& cfg) {
  cfg.validate();
  spec.validate();
  if (spec.num_qubits != rho.num_qubits()) throw InvalidArgument("monotone and density matrix qubit counts differ");
  const Spectrum spectrum = positive_spectrum(rho);
  const Eigen::Index r = spectrum.values.size();

  if (r == 1) {
    Decomposition pure = steer(spectrum, Eigen::MatrixXcd::Identity(1, 1));
    const double value = roof_objective(pure, spec, cfg.shots);
    return {value, std::move(pure), 0, true, 0, {}};
  }

  const Eigen::Index k = r + cfg.extra_terms;
  if (k > rho.dim() * rho.dim()) {
    throw InvalidArgument("decomposition size k = " + std::to_string(k) + " exceeds the (2^N)^2 cap");
  }
  const RoofSearch search(spectrum, spec, cfg, k);
  std::vector<std::future<RestartOutcome>> futures;
  futures.reserve(static_cast<std::size_t>(cfg.restarts));
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    futures.push_back(std::async(std::launch::async, [&search, restart] { return search.run(restart); }));
  }
  std::vector<RestartOutcome> outcomes;
  for (auto& f : futures) outcomes.push_back(f.get());

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].value < outcomes[best].value) best = i;
  }
  RoofResult result{outcomes[best].value, search.decomposition(outcomes[best].params), outcomes[best].iterations,
                    outcomes[best].converged, static_cast<int>(best), {}};
  for (auto& o : outcomes) result.trajectories.push_back(std::move(o.trajectory));
  return result;
}

double wootters_oracle(const MixedState& rho) {
  if (rho.num_qubits() != 2) throw InvalidArgument("Wootters formula applies to two qubits only");
  const Eigen::MatrixXcd yy = dense_matrix(PauliString("YY"));
  const Eigen::MatrixXcd flipped = yy * rho.matrix().conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rho_solver(rho.matrix());
  // Clamp roundoff negatives; operatorSqrt would turn them into NaN.
  const Eigen::MatrixXcd sqrt_rho = rho_solver.eigenvectors() *
                                    rho_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                                    rho_solver.eigenvectors().adjoint();
  Eigen::MatrixXcd r = sqrt_rho * flipped * sqrt_rho;
  r = 0.5 * (r + r.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r, Eigen::EigenvaluesOnly);
  Eigen::VectorXd lambdas = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lambdas.data(), lambdas.data() + lambdas.size(), std::greater<>());
  if (!lambdas.allFinite()) throw NumericalIntegrityError("non-finite spectrum in concurrence oracle");
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

bool efficiency_check(std::uint64_t k, std::uint64_t l, std::uint64_t m, int num_qubits) {
  if (k == 0 || l == 0 || m == 0) throw InvalidArgument("efficiency check needs positive k, l, m");
  const std::uint64_t baseline = tomography_baseline(num_qubits);
  unsigned __int128 cost = k;
  for (std::uint64_t factor : {l, m}) {
    if (cost >= baseline) return false;
    cost *= factor;
  }
  return cost < baseline;
}

}  // namespace embedsim
