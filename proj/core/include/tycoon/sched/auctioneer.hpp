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
#include <vector>

#include "tycoon/common/credits.hpp"
#include "tycoon/sched/bid_heap.hpp"
#include "tycoon/sched/price_stats.hpp"
#include "tycoon/sched/types.hpp"

namespace tycoon::sched {

struct SliceOutcome {
  std::optional<AgentId> winner;  // nullopt: the processor idled
  Credits payment;
  double clearing_price = 0.0;    // per full slice
  bool by_reservation = false;
};

/// Auction Share scheduler for one processor.
///
/// Runnable agents sit in a BidHeap. A slice costs one O(1) top lookup, an
/// O(1) runner-up lookup for second price, and one O(log n) key update for
/// the charged winner. Funding and q changes are O(log n) updates as well.
///
/// Credits only move between agent balances and `revenue()`: charges and
/// reservation prepayments add to revenue, and nothing else touches it.
class Auctioneer {
 public:
  explicit Auctioneer(SchedulerConfig config = {});

  const SchedulerConfig& config() const { return config_; }

  /// Throws Error(invalid_account) on a duplicate id or q <= 0.
  void add_agent(const AgentAccount& account, bool runnable = true);
  /// Drops the agent and any reservation it holds; returns its final state.
  AgentAccount remove_agent(AgentId id);
  bool has_agent(AgentId id) const { return accounts_.contains(id); }
  const AgentAccount& account(AgentId id) const;
  std::vector<AgentId> agents() const;

  void set_runnable(AgentId id, bool runnable);
  bool runnable(AgentId id) const;
  void fund(AgentId id, Credits amount);
  void set_requested_cpu(AgentId id, double requested_cpu);

  double reserved_fraction() const;
  double quote(double fraction, int period) const;
  /// Pays `quote` from the agent's balance and activates the reservation.
  const Reservation& accept(AgentId id, double quote, double fraction, int period);
  const std::vector<Reservation>& reservations() const { return reservations_; }

  /// Allocates one slice and charges the winner for `elapsed` seconds of it.
  SliceOutcome run_slice(double elapsed);
  SliceOutcome run_slice() { return run_slice(config_.timeslice_length); }

  Credits revenue() const { return revenue_; }
  Credits total_balance() const;
  const PriceStats& price_stats() const { return prices_; }

  std::uint64_t comparisons() const { return heap_.comparisons(); }
  void reset_comparisons() { heap_.reset_comparisons(); }

 private:
  struct Slot {
    AgentAccount account;
    bool runnable = true;
  };
  Slot& slot(AgentId id);
  const Slot& slot(AgentId id) const;
  void refresh_bid(const Slot& s);

  SchedulerConfig config_;
  std::map<AgentId, Slot> accounts_;
  BidHeap heap_;
  std::vector<Reservation> reservations_;
  PriceStats prices_;
  Credits revenue_;
  std::uint64_t next_sequence_ = 0;
};

}  // namespace tycoon::sched
