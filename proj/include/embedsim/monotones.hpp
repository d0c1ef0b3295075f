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

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "embedsim/embedding.hpp"
#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/// Diagonal metric g = diag(-1, 1, 0, 1) over (sigma_0, sigma_x, sigma_y, sigma_z).
struct GTensor {
  static constexpr std::array<double, 4> diagonal{-1.0, 1.0, 0.0, 1.0};

  static constexpr double at(Pauli mu) { return diagonal[static_cast<std::size_t>(mu)]; }
  /// Symbols with a nonzero metric entry, in expansion order.
  static constexpr std::array<Pauli, 3> support{Pauli::I, Pauli::X, Pauli::Z};
};

/// Placeholder for a Pauli index summed through the metric.
struct ContractionIndex {
  int label;

  bool operator==(const ContractionIndex&) const = default;
};

using Slot = std::variant<Pauli, ContractionIndex>;

/// An antilinear monotone
///
///   E(psi) = | sum over contracted indices  prod_c g(mu_c)  prod_f <psi| F_f K |psi> |
///
/// where each factor F_f is a Pauli string whose slots are either fixed or
/// carry a contraction label. Every label occurs in exactly one slot and in
/// exactly one contraction pair, so each contraction ties two slots together.
struct MonotoneSpec {
  std::string name;
  int num_qubits = 0;
  std::vector<std::vector<Slot>> factors;
  std::vector<std::pair<int, int>> contractions;

  /// Number of metric contractions (k).
  int degree() const { return static_cast<int>(contractions.size()); }

  /// Throws InvalidArgument on malformed slots or contraction labels.
  void validate() const;

  bool operator==(const MonotoneSpec&) const = default;
};

namespace monotone_specs {

/// |<psi| Y⊗Y K |psi>|
MonotoneSpec concurrence();
/// |g <σμ⊗Y⊗Y K> <σν⊗Y⊗Y K>|
MonotoneSpec three_tangle();
/// |<psi| Y^{⊗N} K |psi>|; identically zero for odd N.
MonotoneSpec sigma_y_chain(int num_qubits);
/// Even N: sigma_y_chain. Odd N: the contracted form with σμ on qubit 0.
MonotoneSpec n_qubit(int num_qubits);
/// |g g <σμ⊗σλ K> <σν⊗στ K>|
MonotoneSpec second_order_two_qubit();

/// Looks up a preset by name: concurrence, three_tangle, n_qubit,
/// second_order. `num_qubits` is only consulted by n_qubit.
MonotoneSpec by_name(const std::string& name, int num_qubits);

}  // namespace monotone_specs

/// One term of the metric expansion: weight prod g(mu_c) times the product
/// of antilinear expectations of `factors`.
struct ProductTerm {
  double weight;
  std::vector<PauliString> factors;
};

/// 3^k product terms (zero metric entries skipped), first contraction most
/// significant in the enumeration order.
std::vector<ProductTerm> expand_product_terms(const MonotoneSpec& spec);

/// Distinct antilinear Pauli strings of the expansion, first-appearance order.
std::vector<PauliString> antilinear_strings(const MonotoneSpec& spec);

/// Enlarged-space observables σz⊗O, σx⊗O for every distinct antilinear
/// string O, deduplicated across the expansion.
std::vector<PauliSum> expand_to_observables(const MonotoneSpec& spec);

/// Counting convention without cross-term deduplication: each product term
/// contributes two observables per distinct antilinear factor it contains.
std::uint64_t count_observables_per_term(const MonotoneSpec& spec);

/// 2 * 3^k
std::uint64_t observable_count_law(int degree);

/// 2^{2N} - 1 observables for full state tomography.
std::uint64_t tomography_baseline(int num_qubits);

struct AntilinearTerm {
  PauliString pauli;
  Complex value;
};

struct MonotoneValue {
  double value = 0.0;
  std::vector<AntilinearTerm> terms;
  int observable_count = 0;

  /// Re-evaluates the contraction from the stored per-term expectations.
  double recompute(const MonotoneSpec& spec) const;
};

/// |sum_t w_t prod_f A(f)| with A looked up in `terms` by Pauli string.
double contract(const MonotoneSpec& spec, const std::vector<AntilinearTerm>& terms);

enum class Path { Direct, Embedded };

/// <psi|O|psi*> computed from the complex amplitudes.
Complex antilinear_expectation_direct(const PureState& psi, const PauliSum& o);

/// <σz⊗O> - i <σx⊗O> from two Hermitian expectations on the real enlarged state.
Complex antilinear_expectation_embedded(const EnlargedState& enlarged, const PauliSum& o);

MonotoneValue evaluate_direct(const PureState& psi, const MonotoneSpec& spec);
MonotoneValue evaluate_embedded(const EnlargedState& enlarged, const MonotoneSpec& spec);
MonotoneValue evaluate(const PureState& psi, const MonotoneSpec& spec, Path path);

MonotoneValue concurrence(const PureState& psi, Path path);
MonotoneValue three_tangle(const PureState& psi, Path path);
MonotoneValue n_qubit_monotone(const PureState& psi, Path path);
MonotoneValue second_order_two_qubit_monotone(const PureState& psi, Path path);

}  // namespace embedsim
