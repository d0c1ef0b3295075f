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

#include "embedsim/monotones.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace embedsim {

void MonotoneSpec::validate() const {
  if (num_qubits < 1) throw InvalidArgument("monotone '" + name + "' needs a positive qubit count");
  if (factors.empty()) throw InvalidArgument("monotone '" + name + "' has no factors");
  std::map<int, int> slot_uses;
  for (const auto& factor : factors) {
    if (static_cast<int>(factor.size()) != num_qubits) {
      throw InvalidArgument("monotone '" + name + "' has a factor with " + std::to_string(factor.size()) +
                            " slots, expected " + std::to_string(num_qubits));
    }
    for (const auto& slot : factor) {
      if (const auto* idx = std::get_if<ContractionIndex>(&slot)) ++slot_uses[idx->label];
    }
  }
  std::map<int, int> contraction_uses;
  for (const auto& [a, b] : contractions) {
    if (a == b) throw InvalidArgument("contraction pairs index " + std::to_string(a) + " with itself");
    ++contraction_uses[a];
    ++contraction_uses[b];
  }
  for (const auto& [label, count] : slot_uses) {
    if (count != 1) {
      throw InvalidArgument("contraction index " + std::to_string(label) + " occupies " +
                            std::to_string(count) + " slots, expected 1");
    }
    if (contraction_uses[label] != 1) {
      throw InvalidArgument("contraction index " + std::to_string(label) + " must appear in exactly one pair");
    }
  }
  for (const auto& [label, count] : contraction_uses) {
    if (!slot_uses.contains(label)) {
      throw InvalidArgument("contraction references index " + std::to_string(label) + " with no slot");
    }
  }
}

namespace monotone_specs {

namespace {

std::vector<Slot> y_chain_slots(int count) { return std::vector<Slot>(static_cast<std::size_t>(count), Pauli::Y); }

}  // namespace

MonotoneSpec concurrence() { return {"concurrence", 2, {y_chain_slots(2)}, {}}; }

MonotoneSpec three_tangle() {
  MonotoneSpec spec = n_qubit(3);
  spec.name = "three_tangle";
  return spec;
}

MonotoneSpec sigma_y_chain(int num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("sigma_y chain needs at least one qubit");
  return {"sigma_y_chain", num_qubits, {y_chain_slots(num_qubits)}, {}};
}

MonotoneSpec n_qubit(int num_qubits) {
  if (num_qubits < 2) throw InvalidArgument("N-qubit monotone needs N >= 2");
  if (num_qubits % 2 == 0) {
    MonotoneSpec spec = sigma_y_chain(num_qubits);
    spec.name = "n_qubit";
    return spec;
  }
  std::vector<Slot> first{ContractionIndex{0}};
  std::vector<Slot> second{ContractionIndex{1}};
  for (int q = 1; q < num_qubits; ++q) {
    first.emplace_back(Pauli::Y);
    second.emplace_back(Pauli::Y);
  }
  return {"n_qubit", num_qubits, {first, second}, {{0, 1}}};
}

MonotoneSpec second_order_two_qubit() {
  return {"second_order",
          2,
          {{ContractionIndex{0}, ContractionIndex{2}}, {ContractionIndex{1}, ContractionIndex{3}}},
          {{0, 1}, {2, 3}}};
}

MonotoneSpec by_name(const std::string& name, int num_qubits) {
  if (name == "concurrence") return concurrence();
  if (name == "three_tangle") return three_tangle();
  if (name == "n_qubit") return n_qubit(num_qubits);
  if (name == "second_order") return second_order_two_qubit();
  if (name == "sigma_y_chain") return sigma_y_chain(num_qubits);
  throw InvalidArgument("unknown monotone preset '" + name + "'");
}

}  // namespace monotone_specs

std::vector<ProductTerm> expand_product_terms(const MonotoneSpec& spec) {
  spec.validate();
  const int k = spec.degree();
  std::map<int, std::size_t> contraction_of;
  for (std::size_t c = 0; c < spec.contractions.size(); ++c) {
    contraction_of[spec.contractions[c].first] = c;
    contraction_of[spec.contractions[c].second] = c;
  }
  std::size_t total = 1;
  for (int c = 0; c < k; ++c) total *= GTensor::support.size();

  std::vector<ProductTerm> out;
  out.reserve(total);
  std::vector<Pauli> assignment(static_cast<std::size_t>(k));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    double weight = 1.0;
    for (int c = k - 1; c >= 0; --c) {
      const Pauli mu = GTensor::support[rest % GTensor::support.size()];
      rest /= GTensor::support.size();
      assignment[static_cast<std::size_t>(c)] = mu;
      weight *= GTensor::at(mu);
    }
    ProductTerm term{weight, {}};
    for (const auto& factor : spec.factors) {
      std::vector<Pauli> symbols;
      symbols.reserve(factor.size());
      for (const auto& slot : factor) {
        if (const auto* p = std::get_if<Pauli>(&slot)) {
          symbols.push_back(*p);
        } else {
          symbols.push_back(assignment[contraction_of.at(std::get<ContractionIndex>(slot).label)]);
        }
      }
      term.factors.emplace_back(std::move(symbols));
    }
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<PauliString> antilinear_strings(const MonotoneSpec& spec) {
  std::vector<PauliString> out;
  for (const auto& term : expand_product_terms(spec)) {
    for (const auto& f : term.factors) {
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
  return out;
}

std::vector<PauliSum> expand_to_observables(const MonotoneSpec& spec) {
  std::vector<PauliSum> out;
  for (const auto& p : antilinear_strings(spec)) {
    const ObservablePair pair = embed_observable(PauliSum(1.0, p));
    out.push_back(pair.z_part);
    out.push_back(pair.x_part);
  }
  return out;
}

std::uint64_t count_observables_per_term(const MonotoneSpec& spec) {
  std::uint64_t count = 0;
  for (const auto& term : expand_product_terms(spec)) {
    std::set<PauliString> distinct(term.factors.begin(), term.factors.end());
    count += 2 * distinct.size();
  }
  return count;
}

std::uint64_t observable_count_law(int degree) {
  if (degree < 0) throw InvalidArgument("degree must be nonnegative");
  std::uint64_t out = 2;
  for (int i = 0; i < degree; ++i) out *= 3;
  return out;
}

std::uint64_t tomography_baseline(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 31) throw InvalidArgument("tomography baseline defined for 1 <= N <= 31");
  return (std::uint64_t{1} << (2 * num_qubits)) - 1;
}

double contract(const MonotoneSpec& spec, const std::vector<AntilinearTerm>& terms) {
  Complex total(0.0, 0.0);
  for (const auto& product : expand_product_terms(spec)) {
    Complex value(product.weight, 0.0);
    for (const auto& f : product.factors) {
      auto it = std::find_if(terms.begin(), terms.end(), [&](const AntilinearTerm& t) { return t.pauli == f; });
      if (it == terms.end()) throw InvalidArgument("missing antilinear expectation for '" + f.str() + "'");
      value *= it->value;
    }
    total += value;
  }
  return std::abs(total);
}

double MonotoneValue::recompute(const MonotoneSpec& spec) const { return contract(spec, terms); }

Complex antilinear_expectation_direct(const PureState& psi, const PauliSum& o) {
  const Eigen::VectorXcd conj = psi.amplitudes().conjugate();
  return psi.amplitudes().dot(apply_pauli_sum(o, conj));
}

Complex antilinear_expectation_embedded(const EnlargedState& enlarged, const PauliSum& o) {
  const ObservablePair pair = embed_observable(o);
  return {expectation(enlarged.amplitudes(), pair.z_part), -expectation(enlarged.amplitudes(), pair.x_part)};
}

namespace {

void require_arity(const MonotoneSpec& spec, int num_qubits) {
  if (spec.num_qubits != num_qubits) {
    throw InvalidArgument("monotone '" + spec.name + "' acts on " + std::to_string(spec.num_qubits) +
                          " qubits, state has " + std::to_string(num_qubits));
  }
}

template <typename Evaluate>
MonotoneValue evaluate_with(const MonotoneSpec& spec, Evaluate&& antilinear) {
  MonotoneValue out;
  for (const auto& p : antilinear_strings(spec)) out.terms.push_back({p, antilinear(PauliSum(1.0, p))});
  out.observable_count = static_cast<int>(2 * out.terms.size());
  out.value = contract(spec, out.terms);
  return out;
}

}  // namespace

MonotoneValue evaluate_direct(const PureState& psi, const MonotoneSpec& spec) {
  require_arity(spec, psi.num_qubits());
  return evaluate_with(spec, [&](const PauliSum& o) { return antilinear_expectation_direct(psi, o); });
}

MonotoneValue evaluate_embedded(const EnlargedState& enlarged, const MonotoneSpec& spec) {
  require_arity(spec, enlarged.simulated_qubits());
  return evaluate_with(spec, [&](const PauliSum& o) { return antilinear_expectation_embedded(enlarged, o); });
}

MonotoneValue evaluate(const PureState& psi, const MonotoneSpec& spec, Path path) {
  return path == Path::Direct ? evaluate_direct(psi, spec) : evaluate_embedded(embed_state(psi), spec);
}

MonotoneValue concurrence(const PureState& psi, Path path) {
  return evaluate(psi, monotone_specs::concurrence(), path);
}

MonotoneValue three_tangle(const PureState& psi, Path path) {
  return evaluate(psi, monotone_specs::three_tangle(), path);
}

MonotoneValue n_qubit_monotone(const PureState& psi, Path path) {
  return evaluate(psi, monotone_specs::n_qubit(psi.num_qubits()), path);
}

MonotoneValue second_order_two_qubit_monotone(const PureState& psi, Path path) {
  return evaluate(psi, monotone_specs::second_order_two_qubit(), path);
}

}  // namespace embedsim
