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

#include <filesystem>
#include <vector>

#include "tycoon/app/config.hpp"
#include "tycoon/app/csv.hpp"
#include "tycoon/host/host_sim.hpp"

namespace tycoon::app {

struct Table1Row {
  host::SchedulerKind scheduler;
  double web_share;
  bool yields;
};

/// The five single-host configurations, in the published order.
std::vector<Table1Row> table1_rows();

CsvTable host_metrics_table(const std::vector<host::HostSimConfig>& configs,
                            const std::vector<host::HostMetrics>& metrics);

struct ExperimentOutput {
  std::vector<std::filesystem::path> files;
};

/// Runs the configured experiment and writes its CSV files into `out_dir`
/// (created if missing). Every file starts with "# config-hash: <hex>".
ExperimentOutput run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir);

}  // namespace tycoon::app
