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
#include <vector>

#include <Eigen/Core>

#include "embedsim/embedding.hpp"
#include "embedsim/monotones.hpp"
#include "embedsim/pauli.hpp"

namespace embedsim {

struct ShotPlan {
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Sub-seed for the `index`-th observable of a plan: SplitMix64 finalizer
/// applied to seed + (index + 1) * 0x9E3779B97F4A7C15.
std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index);

/// Mean of `plan.shots` ±1 outcomes of P with p(+1) = (1 + <P>)/2, drawn
/// from a generator seeded with plan.seed.
double sample_expectation(const Eigen::VectorXcd& s, const PauliString& p, const ShotPlan& plan);
double sample_expectation(const Eigen::VectorXd& s, const PauliString& p, const ShotPlan& plan);

/// Probability of outcome +1 for an exact expectation value; throws if it
/// falls outside [0, 1] by more than 1e-10.
double plus_probability(double expectation_value);

struct ObservableEstimate {
  PauliString observable;
  double estimate;
};

struct SampledMonotone {
  double estimate = 0.0;
  std::vector<ObservableEstimate> per_observable;
  std::vector<AntilinearTerm> terms;
};

/// Samples each observable of expand_to_observables(spec) with its own
/// sub-seed and combines the estimates through the MonotoneSpec's contraction.
/// Quadratic monotones are reported as plug-in estimates (bias O(1/S)).
SampledMonotone sample_monotone(const EnlargedState& enlarged, const MonotoneSpec& spec, const ShotPlan& plan);

}  // namespace embedsim
