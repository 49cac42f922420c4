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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tycoon/harness/scenario.hpp"
#include "tycoon/host/host_sim.hpp"
#include "tycoon/market/market_sim.hpp"

namespace tycoon::app {

enum class ExperimentKind { host, market, harness, table1, figure1 };

const char* to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment(std::string_view name);

/// Fully resolved experiment description. Each module block mirrors that
/// module's config; per-run seeds come from `seeds`, not the blocks.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::table1;
  std::vector<std::uint64_t> seeds;  // empty: the experiment's default set
  int repetitions = 1;               // a single seed s expands to s .. s+repetitions-1
  std::string output_dir = "results";
  unsigned threads = 0;              // 0 = hardware concurrency

  host::HostSimConfig host;
  market::MarketConfig market;
  std::vector<double> interarrivals{140, 120, 100, 80, 60, 50, 40, 20};
  harness::ScenarioConfig harness = harness::ScenarioConfig::example();

  /// Seeds actually run, after defaults and repetitions.
  std::vector<std::uint64_t> resolved_seeds() const;
  /// Throws Error(invalid_config).
  void validate() const;
};

/// Parses a JSON document; omitted keys keep their defaults, unknown keys
/// are rejected with Error(invalid_config).
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string& path);

/// Applies one `dotted.key=value` override; the value is read as JSON when
/// it parses, as a string otherwise.
void apply_override(ExperimentConfig& config, std::string_view assignment);

/// "A..B" or a single number.
std::vector<std::uint64_t> parse_seed_range(std::string_view text);

/// Canonical JSON of everything that affects results (output_dir and
/// threads excluded).
std::string canonical_json(const ExperimentConfig& config);
/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

}  // namespace tycoon::app
