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

#include "tycoon/sched/auction_share.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tycoon/common/error.hpp"
#include "tycoon/sched/reservation.hpp"

namespace tycoon::sched {

void SchedulerConfig::validate() const {
  if (!(timeslice_length > 0.0)) {
    throw Error(Errc::invalid_config, "timeslice_length must be positive");
  }
  if (!(reservation_capacity >= 0.0 && reservation_capacity < 1.0)) {
    throw Error(Errc::invalid_config, "reservation_capacity must lie in [0, 1)");
  }
  if (price_window == 0) {
    throw Error(Errc::invalid_config, "price_window must be positive");
  }
}

double compute_bid(const AgentAccount& account) {
  if (!(account.requested_cpu > 0.0)) {
    throw Error(Errc::invalid_account,
                "agent " + std::to_string(account.id) + " requests no processor time");
  }
  return account.balance.to_double() / account.requested_cpu;
}

std::optional<AgentId> select_winner(std::span<const AgentAccount> runnable,
                                     std::span<const Reservation> reservations) {
  const Reservation* proxy = nullptr;
  for (const Reservation& r : reservations) {
    if (!r.active() || !reservation_pending(r)) continue;
    if (proxy == nullptr || r.sequence < proxy->sequence) proxy = &r;
  }
  if (proxy != nullptr) return proxy->agent;

  std::optional<AgentId> best;
  double best_bid = 0.0;
  for (const AgentAccount& a : runnable) {
    const double bid = compute_bid(a);
    if (!best || bid > best_bid || (bid == best_bid && a.id < *best)) {
      best = a.id;
      best_bid = bid;
    }
  }
  return best;
}

Credits charge(AgentAccount& account, double elapsed, const SchedulerConfig& config,
               std::optional<double> second_bid) {
  if (!(elapsed > 0.0) || elapsed > config.timeslice_length) {
    throw Error(Errc::invalid_elapsed, "elapsed must lie in (0, timeslice_length]");
  }
  const double rate = config.price_mode == PriceMode::first_price
                          ? compute_bid(account)
                          : std::max(0.0, second_bid.value_or(0.0));
  const double amount = (elapsed / config.timeslice_length) * rate;
  const Credits payment = min(Credits::from_double(amount), account.balance);
  account.balance -= payment;
  return payment;
}

void fund(AgentAccount& account, Credits amount) {
  if (amount.is_negative()) {
    throw Error(Errc::invalid_amount, "funding amount must be non-negative");
  }
  account.balance += amount;
}

}  // namespace tycoon::sched
