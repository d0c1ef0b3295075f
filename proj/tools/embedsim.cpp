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

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "embedsim/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"embedsim: embedding simulator experiments (evolve, monotone, roof, count)"};
  std::string config_path;
  std::string output = "-";
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  bool timing = false;
  app.add_option("--config", config_path, "JSON experiment configuration")->required();
  app.add_option("--output", output, "output path, '-' for standard output");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "overrides shot and roof seeds");
  app.add_option("--shots", shots, "overrides the shot count");
  app.add_flag("--timing", timing, "record wall-clock durations (output no longer reproducible)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  using namespace embedsim;
  try {
    std::ifstream in(config_path);
    if (!in) throw IoError("cannot open config '" + config_path + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("config", e.what());
    }
    ExperimentConfig cfg = parse_config(doc);
    if (shots) {
      if (*shots < 1) throw ConfigError("--shots", "must be at least 1");
      if (!cfg.shots) cfg.shots = ShotPlan{};
      cfg.shots->shots = *shots;
    }
    if (seed) {
      if (cfg.shots) cfg.shots->seed = *seed;
      cfg.roof.seed = *seed;
    }
    const auto records = run(cfg, RunOptions{timing});
    emit(records, format == "csv" ? Format::Csv : Format::Json, output);
  } catch (const IoError& e) {
    std::cerr << "embedsim: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericalIntegrityError& e) {
    std::cerr << "embedsim: numerical integrity error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConfigError& e) {
    std::cerr << "embedsim: config error in " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "embedsim: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::length_error& e) {
    std::cerr << "embedsim: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return EXIT_SUCCESS;
}
