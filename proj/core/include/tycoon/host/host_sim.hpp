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
#include <vector>

#include "tycoon/sched/types.hpp"

namespace tycoon::host {

enum class SchedulerKind { proportional_share, auction_share };

const char* to_string(SchedulerKind kind);

/// One web server (process 0) plus batch processes (1..n-1).
struct HostSimConfig {
  SchedulerKind scheduler = SchedulerKind::proportional_share;
  int num_timeslices = 1000;
  double timeslice_length = 0.010;
  // PS weights or AS income rates (credits per second); index 0 is the web server.
  std::vector<double> weights{1.0, 2.0, 3.0, 4.0};
  // When set, replaces weights[0] so the web server's entitlement is this fraction.
  std::optional<double> web_share;
  // Entitlement used for error accounting when the web server does not yield.
  double web_intended_share = 0.1;
  double request_probability = 0.1;
  double service_demand = 0.010;
  bool web_yields = true;
  std::uint64_t seed = 42;
  // Auction Share only.
  double funding_interval = 0.03;  // mean seconds between funding events
  double bid_horizon = 1.0;        // E(t) in seconds
  sched::PriceMode price_mode = sched::PriceMode::second_price;
  // Slices excluded from statistics.
  int warmup = 100;

  /// Throws Error(invalid_config).
  void validate() const;
  /// Weights after applying web_share.
  std::vector<double> effective_weights() const;
};

struct HostMetrics {
  double scheduling_error = 0.0;
  std::optional<double> mean_latency;  // seconds; absent without requests
  double utilization = 0.0;
  std::vector<double> shares;    // per process, over the measured window
  std::vector<double> intended;  // per process; 0 marks a process left out of the error
  long requests = 0;
  double web_share = 0.0;  // entitlement of the web server
};

HostMetrics run_host_sim(const HostSimConfig& config);

}  // namespace tycoon::host
