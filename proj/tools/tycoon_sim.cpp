// Copyright 2026 The Tycoon Simulator Authors.
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

// tycoon-sim: command-line runner for the single-host, market and
// architecture experiments.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tycoon/app/config.hpp"
#include "tycoon/app/experiment.hpp"
#include "tycoon/common/error.hpp"

namespace {

using tycoon::app::ExperimentConfig;

ExperimentConfig load(const std::string& path) {
  return path.empty() ? ExperimentConfig{} : tycoon::app::load_config(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Market-based resource allocation simulator"};
  app.require_subcommand(1);

  std::string experiment;
  std::string config_path;
  std::string seeds;
  std::string out_dir;
  std::vector<std::string> overrides;
  unsigned threads = 0;
  std::uint64_t seed = 0;

  CLI::App* run = app.add_subcommand("run", "Run an experiment and write CSV results");
  run->add_option("--experiment", experiment, "host | market | harness | table1 | figure1");
  run->add_option("--config", config_path, "JSON configuration file");
  auto* seed_opt = run->add_option("--seed", seed, "Run a single seed");
  run->add_option("--seeds", seeds, "Seed range A..B")->excludes(seed_opt);
  run->add_option("--out", out_dir, "Output directory (default: $TYCOON_SIM_OUT, then config)");
  run->add_option("--set", overrides, "Override a config value: dotted.key=value");
  run->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "Check a configuration file");
  validate->add_option("--config", validate_path, "JSON configuration file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const ExperimentConfig c = tycoon::app::load_config(validate_path);
      std::cout << "ok " << tycoon::app::to_string(c.experiment)
                << " config-hash " << tycoon::app::config_hash(c) << "\n";
      return 0;
    }

    ExperimentConfig c = load(config_path);
    for (const std::string& o : overrides) tycoon::app::apply_override(c, o);
    if (!experiment.empty()) {
      const auto kind = tycoon::app::parse_experiment(experiment);
      if (!kind) throw tycoon::Error(tycoon::Errc::invalid_config,
                                     "unknown experiment '" + experiment + "'");
      c.experiment = *kind;
    }
    if (*seed_opt) c.seeds = {seed};
    if (!seeds.empty()) c.seeds = tycoon::app::parse_seed_range(seeds);
    if (run->count("--threads") > 0) c.threads = threads;
    if (out_dir.empty()) {
      const char* env = std::getenv("TYCOON_SIM_OUT");
      out_dir = (env != nullptr && *env != '\0') ? env : c.output_dir;
    }
    const auto result = tycoon::app::run_experiment(c, out_dir);
    for (const auto& f : result.files) std::cout << f.string() << "\n";
    return 0;
  } catch (const tycoon::Error& e) {
    std::cerr << "tycoon-sim: " << tycoon::to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "tycoon-sim: " << e.what() << "\n";
    return 1;
  }
}
