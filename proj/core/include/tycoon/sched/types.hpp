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

#include <cstddef>
#include <cstdint>

#include "tycoon/common/credits.hpp"

namespace tycoon::sched {

using AgentId = std::uint32_t;
using ProcessId = std::uint32_t;

enum class PriceMode { first_price, second_price };

struct SchedulerConfig {
  double timeslice_length = 0.010;  // seconds
  PriceMode price_mode = PriceMode::first_price;
  // Maximum total reserved fraction; below 1 so the spot market keeps liquidity.
  double reservation_capacity = 0.5;
  std::size_t price_window = 1000;

  /// Throws Error(invalid_config) on a violated invariant.
  void validate() const;
};

/// A bidder on one host.
///
/// `requested_cpu` (q) and `expected_funding_interval` (E(t)) are measured in
/// timeslices, so the bid b/q is the price of one full slice. A batch agent
/// sets q = E(t); a delay-sensitive agent sets q < E(t).
struct AgentAccount {
  AgentId id = 0;
  Credits balance;
  double expected_funding_interval = 1.0;
  double requested_cpu = 1.0;
};

struct PSProcess {
  ProcessId id = 0;
  double weight = 1.0;
  double virtual_time = 0.0;  // processor-seconds per unit weight
};

/// Prepaid guarantee of `fraction` of the processor for `period` slices.
struct Reservation {
  AgentId agent = 0;
  double fraction = 0.0;
  int period = 0;
  double quoted_price = 0.0;
  int slices_elapsed = 0;
  int slices_won = 0;
  std::uint64_t sequence = 0;  // acceptance order; lower wins ties

  bool active() const { return slices_elapsed < period; }
};

}  // namespace tycoon::sched
