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

#include <optional>
#include <span>

#include "tycoon/common/credits.hpp"
#include "tycoon/sched/types.hpp"

namespace tycoon::sched {

/// Bid of an agent: balance / requested_cpu, i.e. the price it offers for
/// one full timeslice. Throws Error(invalid_account) when q <= 0.
double compute_bid(const AgentAccount& account);

/// Picks the agent for the next slice.
///
/// An active reservation that is behind its target wins through its proxy
/// bid (earliest accepted first). Otherwise the highest spot bid among
/// `runnable` wins, ties going to the lowest agent id. Returns nullopt when
/// the processor should idle. This is the linear-scan form; `Auctioneer`
/// keeps the same rule on a heap.
std::optional<AgentId> select_winner(std::span<const AgentAccount> runnable,
                                     std::span<const Reservation> reservations);

/// Charges the winner for `elapsed` seconds of its slice and returns the
/// payment, which is already deducted from `account`.
///
/// First price: (elapsed / timeslice) * own bid. Second price: the same
/// fraction of `second_bid` (absent means zero). The payment never exceeds
/// the balance.
Credits charge(AgentAccount& account, double elapsed, const SchedulerConfig& config,
               std::optional<double> second_bid = std::nullopt);

/// Adds `amount` to the balance. Throws Error(invalid_amount) if negative.
void fund(AgentAccount& account, Credits amount);

}  // namespace tycoon::sched
