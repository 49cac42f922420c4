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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tycoon/common/credits.hpp"
#include "tycoon/harness/agents.hpp"
#include "tycoon/harness/bank.hpp"
#include "tycoon/harness/network.hpp"

namespace tycoon::harness {

struct HostSpec {
  HostId id = 0;
  double speed = 1.0;                 // work units per second
  std::optional<std::uint32_t> owner; // providing user (closed loop earnings)
};

struct UserSpec {
  std::uint32_t id = 0;
  ParentAgentSpec parent;
  Credits income;              // open loop, per funding interval
  double lump_minutes = 10.0;  // each child lump covers this much time
};

struct FaultSpec {
  double time = 0.0;
  HostId host = 0;
};

struct ScenarioConfig {
  std::vector<HostSpec> hosts;
  std::vector<UserSpec> users;
  FundingPolicyKind policy = FundingPolicyKind::open_loop;
  double funding_interval = 60.0;  // seconds
  double duration = 600.0;         // seconds
  double slice = 1.0;              // auction granularity, seconds
  double monitor_interval = 60.0;
  double migration_overhead = 5.0; // seconds a new child spends copying code
  double sls_ttl = 30.0;
  double advertise_interval = 10.0;
  NetworkConfig network;
  std::vector<FaultSpec> faults;
  std::uint64_t seed = 42;

  /// Three unit-speed hosts and two users, open loop.
  static ScenarioConfig example();
  /// Throws Error(invalid_config).
  void validate() const;
};

struct UserReport {
  std::uint32_t user = 0;
  Credits initial;
  Credits final_balance;
  Credits spent;    // charged by auctioneers
  Credits earned;   // received as a host provider
  double progress = 0.0;
  int replacements = 0;
  int starvations = 0;
};

struct HostReport {
  HostId host = 0;
  bool alive = true;
  double speed = 1.0;
  Credits revenue;
  double utilization = 0.0;                // busy slices / live slices
  std::map<std::uint32_t, double> occupancy;  // user -> fraction of the run with a child here
};

struct EventRecord {
  double time = 0.0;
  std::string kind;
  std::int64_t user = -1;
  std::int64_t host = -1;
  double amount = 0.0;
};

struct ScenarioReport {
  std::vector<UserReport> users;
  std::vector<HostReport> hosts;
  std::vector<EventRecord> events;
  Credits total_issued;
  Credits total_balance;
  Credits stranded;  // escrow funds whose messages were lost or hit a dead host
  long audit_checks = 0;
  long audit_failures = 0;
  std::uint64_t messages_delivered = 0;
  std::uint64_t messages_dropped = 0;

  bool ledger_conserved() const { return audit_failures == 0 && total_issued == total_balance; }
};

ScenarioReport run_harness_scenario(const ScenarioConfig& config);

}  // namespace tycoon::harness
