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
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "embedsim/convex_roof.hpp"
#include "embedsim/evolution.hpp"
#include "embedsim/measurement.hpp"
#include "embedsim/monotones.hpp"
#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/// Invalid configuration; `field()` names the offending entry.
class ConfigError : public InvalidArgument {
 public:
  ConfigError(std::string field, const std::string& what)
      : InvalidArgument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Workflow { Evolve, Monotone, Roof, Count };

struct ExperimentConfig {
  Workflow workflow = Workflow::Monotone;
  std::optional<PauliSum> hamiltonian;
  std::optional<PureState> initial_state;
  std::optional<MixedState> mixed_state;
  std::vector<double> times{0.0};
  std::optional<MonotoneSpec> monotone;
  std::optional<ShotPlan> shots;
  RoofConfig roof;
  EvolutionPlan evolution;
};

/// Parses the single-document JSON configuration. Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j);

struct ObservableRecord {
  std::string observable;
  double exact = 0.0;
  std::optional<double> sampled;

  bool operator==(const ObservableRecord&) const = default;
};

struct ResultRecord {
  std::string workflow;
  std::optional<double> t;
  std::optional<double> value_direct;
  std::optional<double> value_embedded;
  std::optional<double> value_sampled;
  std::vector<ObservableRecord> observables;
  std::optional<std::uint64_t> n_observables;
  std::optional<std::uint64_t> n_tomography;
  std::optional<double> duration_ms;
  // evolve
  std::optional<double> trajectory_error;
  std::optional<double> reality_residual;
  // count
  std::optional<int> degree;
  std::optional<std::string> summary;
  // roof
  std::optional<std::uint64_t> k;
  std::optional<int> iterations;
  std::optional<bool> converged;
  std::optional<double> oracle;

  bool operator==(const ResultRecord&) const = default;
};

struct RunOptions {
  /// Wall-clock durations make output nondeterministic, so they are opt-in.
  bool record_timing = false;
};

std::vector<ResultRecord> run(const ExperimentConfig& config, const RunOptions& options = {});

enum class Format { Json, Csv };

nlohmann::json record_to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);

/// JSON array of records, or CSV with columns
/// t,value_direct,value_embedded,value_sampled,n_observables,n_tomography,duration_ms.
void write_records(const std::vector<ResultRecord>& records, Format format, std::ostream& out);

/// Writes to `destination` via a temporary file and rename, or to standard
/// output when `destination` is empty or "-". Throws IoError.
void emit(const std::vector<ResultRecord>& records, Format format, const std::string& destination);

}  // namespace embedsim
