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

#include "tycoon/sched/reservation.hpp"

#include <cmath>

#include "tycoon/common/credits.hpp"
#include "tycoon/common/error.hpp"

namespace tycoon::sched {

namespace {

// Absorbs representation error in products such as 0.3 * 10.
constexpr double kSliceEpsilon = 1e-9;

void check_shape(double fraction, int period) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(Errc::invalid_argument, "reservation fraction must lie in (0, 1]");
  }
  if (period <= 0) {
    throw Error(Errc::invalid_argument, "reservation period must be positive");
  }
}

}  // namespace

double quote_reservation(const PriceStats& stats, double fraction, int period,
                         double reserved_total, const SchedulerConfig& config) {
  check_shape(fraction, period);
  if (reserved_total + fraction > config.reservation_capacity + kSliceEpsilon) {
    throw Error(Errc::capacity_rejected, "reservation limit reached");
  }
  if (stats.empty()) {
    throw Error(Errc::insufficient_history, "no clearing prices observed yet");
  }
  return (stats.mean() + stats.stddev()) * fraction * static_cast<double>(period);
}

Reservation accept_reservation(double quote, double fraction, int period,
                               AgentAccount& account, std::uint64_t sequence) {
  check_shape(fraction, period);
  if (!(quote >= 0.0)) {
    throw Error(Errc::invalid_amount, "quote must be non-negative");
  }
  const Credits price = Credits::from_double(quote);
  if (account.balance < price) {
    throw Error(Errc::insufficient_balance, "balance does not cover the quoted price");
  }
  account.balance -= price;
  Reservation r;
  r.agent = account.id;
  r.fraction = fraction;
  r.period = period;
  r.quoted_price = quote;
  r.sequence = sequence;
  return r;
}

bool reservation_pending(const Reservation& r) {
  if (!r.active()) return false;
  const double target =
      std::ceil(r.fraction * static_cast<double>(r.slices_elapsed + 1) - kSliceEpsilon);
  return static_cast<double>(r.slices_won) < target;
}

void advance_reservation(Reservation& r, bool won) {
  if (!r.active()) return;
  ++r.slices_elapsed;
  if (won) ++r.slices_won;
}

}  // namespace tycoon::sched
