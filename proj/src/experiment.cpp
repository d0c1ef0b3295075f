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

#include "embedsim/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "embedsim/embedding.hpp"
#include "embedsim/serialization.hpp"

namespace embedsim {

using nlohmann::json;

namespace {

Complex parse_complex(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError(field, "expected a number or [re, im] pair");
}

int optional_qubits(const json& j, int fallback) {
  return j.is_object() && j.contains("n_qubits") ? j["n_qubits"].get<int>() : fallback;
}

PureState parse_state(const json& j, const std::string& field, int inferred_qubits) {
  try {
    std::string preset;
    int n = 0;
    if (j.is_string()) {
      preset = j.get<std::string>();
    } else if (j.is_object() && j.contains("preset")) {
      preset = j["preset"].get<std::string>();
      n = optional_qubits(j, 0);
    } else if (j.is_object() && j.contains("amplitudes")) {
      const json& amps = j["amplitudes"];
      if (!amps.is_array()) throw ConfigError(field + ".amplitudes", "expected an array");
      Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
      for (std::size_t i = 0; i < amps.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = parse_complex(amps[i], field + ".amplitudes[" + std::to_string(i) + "]");
      }
      if (std::abs(v.norm() - 1.0) > 1e-8) throw ConfigError(field + ".amplitudes", "amplitudes are not normalized");
      return PureState::normalized(std::move(v));
    } else {
      throw ConfigError(field, "expected a preset name, {preset, n_qubits}, or {amplitudes}");
    }
    if (preset == "bell") {
      if (n != 0 && n != 2) throw ConfigError(field, "bell preset is a two-qubit state");
      return states::bell();
    }
    if (preset == "ghz") return states::ghz(n ? n : 3);
    if (preset == "w") return states::w(n ? n : 3);
    if (preset == "product" || preset == "zero") {
      const int q = n ? n : inferred_qubits;
      if (q < 1) throw ConfigError(field, "cannot infer qubit count for '" + preset + "'; set n_qubits");
      return states::zero(q);
    }
    throw ConfigError(field, "unknown state preset '" + preset + "'");
  } catch (const json::exception& e) {
    throw ConfigError(field, e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(field, e.what());
  }
}

MixedState parse_mixed_state(const json& j, int inferred_qubits) {
  const std::string field = "mixed_state";
  try {
    if (j.contains("werner")) return states::werner(j["werner"].get<double>());
    if (j.contains("matrix")) {
      const json& rows = j["matrix"];
      const auto dim = static_cast<Eigen::Index>(rows.size());
      Eigen::MatrixXcd m(dim, dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
          throw ConfigError(field + ".matrix", "matrix must be square");
        }
        for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)], field + ".matrix");
      }
      return MixedState(std::move(m));
    }
    if (j.contains("ensemble")) {
      Eigen::MatrixXcd m;
      double total = 0.0;
      for (const auto& member : j["ensemble"]) {
        const double p = member.at("p").get<double>();
        const PureState psi = parse_state(member.at("state"), field + ".ensemble.state", inferred_qubits);
        if (m.size() == 0) m = Eigen::MatrixXcd::Zero(psi.dim(), psi.dim());
        if (psi.dim() != m.rows()) throw ConfigError(field + ".ensemble", "members have different qubit counts");
        m += p * psi.amplitudes() * psi.amplitudes().adjoint();
        total += p;
      }
      if (m.size() == 0) throw ConfigError(field + ".ensemble", "ensemble is empty");
      if (std::abs(total - 1.0) > 1e-8) throw ConfigError(field + ".ensemble", "probabilities do not sum to 1");
      m /= total;
      m = 0.5 * (m + m.adjoint()).eval();
      return MixedState(std::move(m));
    }
  } catch (const json::exception& e) {
    throw ConfigError(field, e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(field, e.what());
  }
  throw ConfigError(field, "expected {werner}, {matrix}, or {ensemble}");
}

MonotoneSpec parse_monotone(const json& j, int inferred_qubits) {
  try {
    if (j.is_string()) return monotone_specs::by_name(j.get<std::string>(), inferred_qubits);
    if (j.is_object() && j.contains("preset")) {
      return monotone_specs::by_name(j["preset"].get<std::string>(), optional_qubits(j, inferred_qubits));
    }
    return monotone_spec_from_json(j);
  } catch (const json::exception& e) {
    throw ConfigError("monotone", e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError("monotone", e.what());
  }
}

Workflow parse_workflow(const json& j) {
  if (!j.is_string()) throw ConfigError("workflow", "expected a string");
  const auto s = j.get<std::string>();
  if (s == "evolve") return Workflow::Evolve;
  if (s == "monotone") return Workflow::Monotone;
  if (s == "roof") return Workflow::Roof;
  if (s == "count") return Workflow::Count;
  throw ConfigError("workflow", "unknown workflow '" + s + "'");
}

std::string workflow_name(Workflow w) {
  switch (w) {
    case Workflow::Evolve: return "evolve";
    case Workflow::Monotone: return "monotone";
    case Workflow::Roof: return "roof";
    case Workflow::Count: return "count";
  }
  return "unknown";
}

template <typename T>
T get_field(const json& j, const std::string& key, const std::string& field, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j[key].get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(field + "." + key, e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config", "configuration must be a JSON object");
  ExperimentConfig cfg;
  if (!j.contains("workflow")) throw ConfigError("workflow", "missing");
  cfg.workflow = parse_workflow(j["workflow"]);

  if (j.contains("hamiltonian")) {
    try {
      cfg.hamiltonian = pauli_sum_from_json(j["hamiltonian"], get_field<int>(j, "n_qubits", "config", 0));
    } catch (const InvalidArgument& e) {
      throw ConfigError("hamiltonian", e.what());
    }
  }
  int inferred = cfg.hamiltonian ? cfg.hamiltonian->num_qubits() : get_field<int>(j, "n_qubits", "config", 0);

  if (j.contains("initial_state")) {
    cfg.initial_state = parse_state(j["initial_state"], "initial_state", inferred);
    if (inferred == 0) inferred = cfg.initial_state->num_qubits();
  }
  if (j.contains("mixed_state")) {
    cfg.mixed_state = parse_mixed_state(j["mixed_state"], inferred);
    if (inferred == 0) inferred = cfg.mixed_state->num_qubits();
  }
  if (j.contains("monotone")) cfg.monotone = parse_monotone(j["monotone"], inferred);

  if (j.contains("times")) {
    try {
      cfg.times = j["times"].get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw ConfigError("times", e.what());
    }
    if (cfg.times.empty()) throw ConfigError("times", "at least one time point is required");
    for (double t : cfg.times) {
      if (!std::isfinite(t)) throw ConfigError("times", "time points must be finite");
    }
  }

  if (j.contains("shots") && !j["shots"].is_null()) {
    const json& s = j["shots"];
    if (s.is_number_integer()) {
      cfg.shots = ShotPlan{s.get<std::uint64_t>(), 0};
    } else {
      cfg.shots = ShotPlan{get_field<std::uint64_t>(s, "shots", "shots", 1000),
                           get_field<std::uint64_t>(s, "seed", "shots", 0)};
    }
    if (cfg.shots->shots < 1) throw ConfigError("shots.shots", "must be at least 1");
  }

  if (j.contains("roof")) {
    const json& r = j["roof"];
    cfg.roof.extra_terms = get_field<int>(r, "extra_terms", "roof", cfg.roof.extra_terms);
    cfg.roof.max_iterations = get_field<int>(r, "max_iterations", "roof", cfg.roof.max_iterations);
    cfg.roof.restarts = get_field<int>(r, "restarts", "roof", cfg.roof.restarts);
    cfg.roof.tolerance = get_field<double>(r, "tolerance", "roof", cfg.roof.tolerance);
    cfg.roof.seed = get_field<std::uint64_t>(r, "seed", "roof", cfg.roof.seed);
    try {
      cfg.roof.validate();
    } catch (const InvalidArgument& e) {
      throw ConfigError("roof", e.what());
    }
  }

  if (j.contains("evolution")) {
    const json& e = j["evolution"];
    const auto method = get_field<std::string>(e, "method", "evolution", "exact");
    if (method == "exact") {
      cfg.evolution.method = Method::Exact;
    } else if (method == "trotter1") {
      cfg.evolution.method = Method::Trotter1;
    } else if (method == "trotter2") {
      cfg.evolution.method = Method::Trotter2;
    } else {
      throw ConfigError("evolution.method", "unknown method '" + method + "'");
    }
    cfg.evolution.steps = get_field<int>(e, "steps", "evolution", 1);
    if (cfg.evolution.method != Method::Exact && cfg.evolution.steps < 1) {
      throw ConfigError("evolution.steps", "must be at least 1");
    }
  }

  // Workflow requirements and qubit-count consistency.
  switch (cfg.workflow) {
    case Workflow::Evolve:
      if (!cfg.hamiltonian) throw ConfigError("hamiltonian", "required for the evolve workflow");
      [[fallthrough]];
    case Workflow::Monotone:
      if (!cfg.initial_state) throw ConfigError("initial_state", "required for the " + workflow_name(cfg.workflow) + " workflow");
      if (cfg.workflow == Workflow::Monotone && !cfg.monotone) throw ConfigError("monotone", "required for the monotone workflow");
      break;
    case Workflow::Roof:
      if (!cfg.mixed_state) throw ConfigError("mixed_state", "required for the roof workflow");
      if (!cfg.monotone) throw ConfigError("monotone", "required for the roof workflow");
      break;
    case Workflow::Count:
      if (!cfg.monotone) throw ConfigError("monotone", "required for the count workflow");
      break;
  }
  const int n = cfg.initial_state ? cfg.initial_state->num_qubits()
                : cfg.mixed_state ? cfg.mixed_state->num_qubits()
                                  : 0;
  if (cfg.hamiltonian && n != 0 && cfg.hamiltonian->num_qubits() != n) {
    throw ConfigError("hamiltonian", "qubit count differs from the state");
  }
  if (cfg.monotone && n != 0 && cfg.monotone->num_qubits != n) {
    throw ConfigError("monotone", "qubit count differs from the state");
  }
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<ResultRecord> run_trajectory(const ExperimentConfig& cfg, const RunOptions& options) {
  const PureState& psi0 = *cfg.initial_state;
  const int n = psi0.num_qubits();
  const PauliSum h = cfg.hamiltonian.value_or(PauliSum(n));
  const EmbeddedHamiltonian h_tilde = embed_hamiltonian(h);
  const EnlargedState enlarged0 = embed_state(psi0);

  std::optional<ExactPropagator> direct_propagator;
  std::optional<ExactPropagator> enlarged_propagator;
  if (cfg.evolution.method == Method::Exact) {
    direct_propagator.emplace(h);
    enlarged_propagator.emplace(h_tilde.op());
  }

  std::vector<ResultRecord> out;
  for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
    const auto start = Clock::now();
    const double t = cfg.times[ti];
    ResultRecord rec;
    rec.workflow = workflow_name(cfg.workflow);
    rec.t = t;

    std::optional<PureState> direct;
    std::optional<EnlargedState> enlarged;
    double residual = 0.0;
    if (direct_propagator) {
      direct.emplace(PureState::normalized(direct_propagator->apply(psi0.amplitudes(), t)));
      const Eigen::VectorXcd evolved = enlarged_propagator->apply(enlarged0.amplitudes().cast<Complex>(), t);
      residual = reality_residual(evolved);
      enlarged.emplace(EnlargedState::from_complex(evolved));
    } else {
      direct.emplace(evolve(psi0, h, t, cfg.evolution));
      enlarged.emplace(evolve(enlarged0, h_tilde, t, cfg.evolution));
    }
    const PureState recovered = unembed_state(*enlarged);
    const double deviation = (recovered.amplitudes() - direct->amplitudes()).cwiseAbs().maxCoeff();
    if (deviation > 1e-9) {
      std::ostringstream msg;
      msg << "embedded trajectory deviates from direct evolution by " << deviation << " at t = " << t;
      throw NumericalIntegrityError(msg.str());
    }
    if (cfg.workflow == Workflow::Evolve) {
      rec.trajectory_error = deviation;
      rec.reality_residual = residual;
    }

    if (cfg.monotone) {
      const MonotoneSpec& spec = *cfg.monotone;
      const MonotoneValue direct_value = evaluate_direct(*direct, spec);
      const MonotoneValue embedded_value = evaluate_embedded(*enlarged, spec);
      if (std::abs(direct_value.value - embedded_value.value) > 1e-9) {
        std::ostringstream msg;
        msg << "direct and embedded monotone values differ at t = " << t;
        throw NumericalIntegrityError(msg.str());
      }
      rec.value_direct = direct_value.value;
      rec.value_embedded = embedded_value.value;
      for (const auto& o : expand_to_observables(spec)) {
        rec.observables.push_back({o.terms().front().pauli.str(), expectation(enlarged->amplitudes(), o), std::nullopt});
      }
      if (cfg.shots) {
        const ShotPlan plan{cfg.shots->shots, derive_subseed(cfg.shots->seed, ti)};
        const SampledMonotone sampled = sample_monotone(*enlarged, spec, plan);
        rec.value_sampled = sampled.estimate;
        for (std::size_t i = 0; i < sampled.per_observable.size(); ++i) rec.observables[i].sampled = sampled.per_observable[i].estimate;
      }
      rec.n_observables = rec.observables.size();
      rec.n_tomography = tomography_baseline(n);
    }
    if (options.record_timing) rec.duration_ms = elapsed_ms(start);
    out.push_back(std::move(rec));
  }
  return out;
}

ResultRecord run_count(const ExperimentConfig& cfg, const RunOptions& options) {
  const auto start = Clock::now();
  const MonotoneSpec& spec = *cfg.monotone;
  ResultRecord rec;
  rec.workflow = "count";
  rec.degree = spec.degree();
  rec.n_observables = expand_to_observables(spec).size();
  rec.n_tomography = tomography_baseline(spec.num_qubits);
  rec.summary = std::to_string(*rec.n_observables) + " vs " + std::to_string(*rec.n_tomography);
  if (options.record_timing) rec.duration_ms = elapsed_ms(start);
  return rec;
}

ResultRecord run_roof(const ExperimentConfig& cfg, const RunOptions& options) {
  const auto start = Clock::now();
  RoofConfig roof = cfg.roof;
  if (cfg.shots) roof.shots = cfg.shots;
  const RoofResult result = convex_roof_estimate(*cfg.mixed_state, *cfg.monotone, roof);
  ResultRecord rec;
  rec.workflow = "roof";
  rec.value_embedded = result.value;
  rec.k = result.best.size();
  rec.iterations = result.iterations;
  rec.converged = result.converged;
  rec.n_observables = expand_to_observables(*cfg.monotone).size();
  rec.n_tomography = tomography_baseline(cfg.mixed_state->num_qubits());
  if (cfg.mixed_state->num_qubits() == 2 && cfg.monotone->factors == monotone_specs::concurrence().factors &&
      cfg.monotone->contractions.empty()) {
    rec.oracle = wootters_oracle(*cfg.mixed_state);
  }
  if (options.record_timing) rec.duration_ms = elapsed_ms(start);
  return rec;
}

}  // namespace

std::vector<ResultRecord> run(const ExperimentConfig& config, const RunOptions& options) {
  switch (config.workflow) {
    case Workflow::Evolve:
    case Workflow::Monotone: return run_trajectory(config, options);
    case Workflow::Count: return {run_count(config, options)};
    case Workflow::Roof: return {run_roof(config, options)};
  }
  return {};
}

namespace {

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void take(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j[key].is_null()) v = j[key].get<T>();
}

}  // namespace

json record_to_json(const ResultRecord& r) {
  json j;
  j["workflow"] = r.workflow;
  put(j, "t", r.t);
  put(j, "value_direct", r.value_direct);
  put(j, "value_embedded", r.value_embedded);
  put(j, "value_sampled", r.value_sampled);
  if (!r.observables.empty()) {
    json obs = json::array();
    for (const auto& o : r.observables) {
      json e{{"observable", o.observable}, {"exact", o.exact}};
      put(e, "sampled", o.sampled);
      obs.push_back(std::move(e));
    }
    j["observables"] = std::move(obs);
  }
  put(j, "n_observables", r.n_observables);
  put(j, "n_tomography", r.n_tomography);
  put(j, "duration_ms", r.duration_ms);
  put(j, "trajectory_error", r.trajectory_error);
  put(j, "reality_residual", r.reality_residual);
  put(j, "degree", r.degree);
  put(j, "summary", r.summary);
  put(j, "k", r.k);
  put(j, "iterations", r.iterations);
  put(j, "converged", r.converged);
  put(j, "oracle", r.oracle);
  return j;
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.workflow = j.at("workflow").get<std::string>();
  take(j, "t", r.t);
  take(j, "value_direct", r.value_direct);
  take(j, "value_embedded", r.value_embedded);
  take(j, "value_sampled", r.value_sampled);
  if (j.contains("observables")) {
    for (const auto& e : j["observables"]) {
      ObservableRecord o{e.at("observable").get<std::string>(), e.at("exact").get<double>(), std::nullopt};
      take(e, "sampled", o.sampled);
      r.observables.push_back(std::move(o));
    }
  }
  take(j, "n_observables", r.n_observables);
  take(j, "n_tomography", r.n_tomography);
  take(j, "duration_ms", r.duration_ms);
  take(j, "trajectory_error", r.trajectory_error);
  take(j, "reality_residual", r.reality_residual);
  take(j, "degree", r.degree);
  take(j, "summary", r.summary);
  take(j, "k", r.k);
  take(j, "iterations", r.iterations);
  take(j, "converged", r.converged);
  take(j, "oracle", r.oracle);
  return r;
}

namespace {

std::string format_double(const std::optional<double>& v) {
  if (!v) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

std::string format_count(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

void write_records(const std::vector<ResultRecord>& records, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    out << arr.dump(2) << '\n';
    return;
  }
  out << "t,value_direct,value_embedded,value_sampled,n_observables,n_tomography,duration_ms\n";
  for (const auto& r : records) {
    out << format_double(r.t) << ',' << format_double(r.value_direct) << ',' << format_double(r.value_embedded)
        << ',' << format_double(r.value_sampled) << ',' << format_count(r.n_observables) << ','
        << format_count(r.n_tomography) << ',' << format_double(r.duration_ms) << '\n';
  }
}

void emit(const std::vector<ResultRecord>& records, Format format, const std::string& destination) {
  std::ostringstream buffer;
  write_records(records, format, buffer);
  if (destination.empty() || destination == "-") {
    std::cout << buffer.str() << std::flush;
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(destination);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + temp.string() + "' for writing");
    file << buffer.str();
    file.close();
    if (!file) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw IoError("failed writing '" + temp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw IoError("cannot move output into place at '" + destination + "': " + ec.message());
  }
}

}  // namespace embedsim
