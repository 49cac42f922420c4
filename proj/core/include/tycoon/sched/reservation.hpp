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

#include "tycoon/sched/price_stats.hpp"
#include "tycoon/sched/types.hpp"

namespace tycoon::sched {

/// Price of reserving `fraction` of the processor for `period` slices:
/// (mean + stddev) * fraction * period over the recent clearing prices.
///
/// Throws Error(capacity_rejected) when the reservation would push the
/// reserved total past `config.reservation_capacity`, and
/// Error(insufficient_history) when no price has been observed yet.
/// Quoting does not change any state.
double quote_reservation(const PriceStats& stats, double fraction, int period,
                         double reserved_total, const SchedulerConfig& config);

/// Debits the quoted price and returns the reservation, active from the
/// next slice. Throws Error(insufficient_balance) if the account can't pay.
Reservation accept_reservation(double quote, double fraction, int period,
                               AgentAccount& account, std::uint64_t sequence = 0);

/// True when the reservation has to win the coming slice to stay on its
/// target of ceil(fraction * (slices_elapsed + 1)) slices.
bool reservation_pending(const Reservation& reservation);

/// Records one elapsed slice against the reservation.
void advance_reservation(Reservation& reservation, bool won);

}  // namespace tycoon::sched
