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

#include "json.hpp"

#include "embedsim/monotones.hpp"
#include "embedsim/pauli.hpp"

namespace embedsim {

/// [{"coeff": real, "pauli": "XYZI"}, ...]. An empty list needs
/// `num_qubits` to fix the operator size.
nlohmann::json pauli_sum_to_json(const PauliSum& h);
PauliSum pauli_sum_from_json(const nlohmann::json& j, int num_qubits = 0);

/// {"name", "n_qubits", "factors": [[slot, ...], ...], "contractions": [[i, j], ...]}
/// with slot = "I" | "X" | "Y" | "Z" | {"idx": n}.
nlohmann::json monotone_spec_to_json(const MonotoneSpec& spec);
MonotoneSpec monotone_spec_from_json(const nlohmann::json& j);

}  // namespace embedsim
