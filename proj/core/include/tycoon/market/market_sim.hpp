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
#include <span>
#include <string_view>
#include <vector>

#include "tycoon/common/credits.hpp"

namespace tycoon::market {

enum class Behavior { obedient, strategic_no_market, strategic_market };

const char* to_string(Behavior behavior);
std::optional<Behavior> parse_behavior(std::string_view name);

struct Task {
  std::uint32_t owner = 0;
  double size = 1.0;          // processor-time units
  double deadline = 0.0;      // absolute time
  double value = 1.0;         // in (0, 1]
  double work_done = 0.0;
  double arrival_time = 0.0;
  std::uint32_t host = 0;     // used only when tasks are not spread
  bool finished = false;
  double completion_time = 0.0;

  double remaining() const { return size - work_done; }
};

struct MarketUser {
  std::uint32_t id = 0;
  Behavior behavior = Behavior::obedient;
  Credits balance;
  double income_rate = 1.0;
  // Ledger totals for the budget-conservation audit.
  Credits initial_balance;
  Credits income;
  Credits spent;
};

struct MarketConfig {
  int num_users = 100;
  int num_hosts = 10;
  int duration = 1000;                   // time units
  double mean_task_interarrival = 100.0;
  double size_mean = 10.0;
  double deadline_mean = 30.0;
  double max_weight = 1.0;               // W_max for non-market strategic users
  double income_rate = 1.0;
  Behavior behavior = Behavior::obedient;
  // Each user has its own Poisson stream; otherwise one system-wide stream
  // assigns tasks to uniformly random users.
  bool per_user_arrivals = true;
  // Spread every task over all hosts; otherwise pin it to one random host.
  bool spread_across_hosts = true;
  std::uint64_t seed = 42;

  /// Throws Error(invalid_config).
  void validate() const;
};

struct UtilityResult {
  double mean_interarrival = 0.0;
  Behavior behavior = Behavior::obedient;
  double utility = 0.0;            // per host per time unit
  double offered_utility = 0.0;    // sum of value * size over arrivals, same scale
  long tasks_arrived = 0;
  long tasks_on_time = 0;
  double max_host_step_work = 0.0; // largest work handed out by one host in one step
  std::vector<MarketUser> users;   // final ledgers
};

// Behavior rules.
double obedient_weight(const Task& task);
double strategic_nomarket_weight(double max_weight);
/// bal * value / (hosts * (deadline - now)), capped at bal / hosts.
/// nullopt when the deadline has passed (the task is abandoned).
std::optional<double> market_budget_weight(double balance, double value, int num_hosts,
                                           double deadline, double now);

/// Water-filling proportional share of `capacity` among tasks; shares are
/// clipped at each task's remaining work and the surplus redistributed.
std::vector<double> allocate_host_step(std::span<const double> weights,
                                       std::span<const double> remaining,
                                       double capacity = 1.0);

/// value * size for an on-time completion, else 0.
double accrue_utility(const Task& task, double completion_time);

UtilityResult run_market_sim(const MarketConfig& config);

struct SweepPoint {
  double interarrival = 0.0;
  Behavior behavior = Behavior::obedient;
  double utility_mean = 0.0;
  double utility_stddev = 0.0;  // sample standard deviation over seeds
  int seeds = 0;
};

/// One point per interarrival value, averaged over `seeds`. Runs in parallel
/// on up to `threads` workers (0 = hardware concurrency); output order and
/// values do not depend on scheduling.
std::vector<SweepPoint> sweep_load(const MarketConfig& base,
                                   std::span<const double> interarrivals,
                                   std::span<const std::uint64_t> seeds,
                                   unsigned threads = 0);

}  // namespace tycoon::market
