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

#include "embedsim/measurement.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace embedsim {

void ShotPlan::validate() const {
  if (shots < 1) throw InvalidArgument("shot plan needs at least one shot");
}

std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double plus_probability(double expectation_value) {
  const double p = 0.5 * (1.0 + expectation_value);
  if (p < -1e-10 || p > 1.0 + 1e-10) {
    std::ostringstream msg;
    msg << "outcome probability " << p << " outside [0, 1]; observable is not ±1-valued";
    throw NumericalIntegrityError(msg.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

namespace {

double sample_from_probability(double p_plus, const ShotPlan& plan) {
  plan.validate();
  std::mt19937_64 rng(plan.seed);
  // The count of +1 outcomes over S independent shots is Binomial(S, p).
  std::binomial_distribution<std::uint64_t> plus(plan.shots, p_plus);
  const auto n_plus = static_cast<double>(plus(rng));
  const auto total = static_cast<double>(plan.shots);
  return (2.0 * n_plus - total) / total;
}

}  // namespace

double sample_expectation(const Eigen::VectorXcd& s, const PauliString& p, const ShotPlan& plan) {
  return sample_from_probability(plus_probability(expectation(s, PauliSum(1.0, p))), plan);
}

double sample_expectation(const Eigen::VectorXd& s, const PauliString& p, const ShotPlan& plan) {
  return sample_from_probability(plus_probability(expectation(s, PauliSum(1.0, p))), plan);
}

SampledMonotone sample_monotone(const EnlargedState& enlarged, const MonotoneSpec& spec, const ShotPlan& plan) {
  plan.validate();
  if (spec.num_qubits != enlarged.simulated_qubits()) {
    throw InvalidArgument("monotone '" + spec.name + "' does not match the enlarged state's qubit count");
  }
  const std::vector<PauliSum> observables = expand_to_observables(spec);
  SampledMonotone out;
  out.per_observable.reserve(observables.size());
  for (std::size_t i = 0; i < observables.size(); ++i) {
    const PauliSum& o = observables[i];
    if (o.size() != 1 || o.terms().front().coeff != 1.0) {
      throw InvalidArgument("sampled observables must be single unit-weight Pauli strings");
    }
    const ShotPlan sub{plan.shots, derive_subseed(plan.seed, i)};
    out.per_observable.push_back({o.terms().front().pauli, sample_expectation(enlarged.amplitudes(), o.terms().front().pauli, sub)});
  }
  // expand_to_observables emits (σz⊗O, σx⊗O) pairs in antilinear_strings order.
  const std::vector<PauliString> strings = antilinear_strings(spec);
  for (std::size_t j = 0; j < strings.size(); ++j) {
    out.terms.push_back({strings[j], Complex(out.per_observable[2 * j].estimate, -out.per_observable[2 * j + 1].estimate)});
  }
  out.estimate = contract(spec, out.terms);
  return out;
}

}  // namespace embedsim
