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

#include "embedsim/serialization.hpp"

namespace embedsim {

using nlohmann::json;

json pauli_sum_to_json(const PauliSum& h) {
  json out = json::array();
  for (const auto& t : h.terms()) out.push_back({{"coeff", t.coeff}, {"pauli", t.pauli.str()}});
  return out;
}

PauliSum pauli_sum_from_json(const json& j, int num_qubits) {
  if (!j.is_array()) throw InvalidArgument("Pauli sum must be a JSON array of {coeff, pauli} records");
  std::vector<PauliTerm> terms;
  for (const auto& record : j) {
    if (!record.is_object() || !record.contains("coeff") || !record.contains("pauli") ||
        !record["coeff"].is_number() || !record["pauli"].is_string()) {
      throw InvalidArgument("Pauli sum record must have numeric 'coeff' and string 'pauli'");
    }
    terms.push_back({record["coeff"].get<double>(), PauliString(record["pauli"].get<std::string>())});
  }
  if (terms.empty()) {
    if (num_qubits < 1) throw InvalidArgument("empty Pauli sum needs an explicit qubit count");
    return PauliSum(num_qubits);
  }
  const int n = terms.front().pauli.num_qubits();
  if (num_qubits > 0 && n != num_qubits) throw InvalidArgument("Pauli sum qubit count mismatch");
  return PauliSum(n, std::move(terms));
}

json monotone_spec_to_json(const MonotoneSpec& spec) {
  json factors = json::array();
  for (const auto& factor : spec.factors) {
    json slots = json::array();
    for (const auto& slot : factor) {
      if (const auto* p = std::get_if<Pauli>(&slot)) {
        slots.push_back(std::string(1, to_char(*p)));
      } else {
        slots.push_back({{"idx", std::get<ContractionIndex>(slot).label}});
      }
    }
    factors.push_back(std::move(slots));
  }
  json contractions = json::array();
  for (const auto& [a, b] : spec.contractions) contractions.push_back({a, b});
  return {{"name", spec.name}, {"n_qubits", spec.num_qubits}, {"factors", factors}, {"contractions", contractions}};
}

MonotoneSpec monotone_spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("monotone spec must be a JSON object");
  MonotoneSpec spec;
  try {
    spec.name = j.value("name", std::string("custom"));
    spec.num_qubits = j.at("n_qubits").get<int>();
    for (const auto& factor : j.at("factors")) {
      std::vector<Slot> slots;
      for (const auto& slot : factor) {
        if (slot.is_string()) {
          const auto s = slot.get<std::string>();
          if (s.size() != 1) throw InvalidArgument("slot symbol must be a single character");
          slots.emplace_back(pauli_from_char(s.front()));
        } else {
          slots.emplace_back(ContractionIndex{slot.at("idx").get<int>()});
        }
      }
      spec.factors.push_back(std::move(slots));
    }
    for (const auto& pair : j.value("contractions", json::array())) {
      if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("contraction must be a pair [i, j]");
      spec.contractions.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed monotone spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

}  // namespace embedsim
