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

#include "tycoon/sched/auctioneer.hpp"

#include <algorithm>
#include <string>

#include "tycoon/common/error.hpp"
#include "tycoon/sched/auction_share.hpp"
#include "tycoon/sched/reservation.hpp"

namespace tycoon::sched {

Auctioneer::Auctioneer(SchedulerConfig config)
    : config_(config), prices_(config.price_window) {
  config_.validate();
}

Auctioneer::Slot& Auctioneer::slot(AgentId id) {
  auto it = accounts_.find(id);
  if (it == accounts_.end()) {
    throw Error(Errc::not_found, "unknown agent " + std::to_string(id));
  }
  return it->second;
}

const Auctioneer::Slot& Auctioneer::slot(AgentId id) const {
  auto it = accounts_.find(id);
  if (it == accounts_.end()) {
    throw Error(Errc::not_found, "unknown agent " + std::to_string(id));
  }
  return it->second;
}

void Auctioneer::refresh_bid(const Slot& s) {
  if (s.runnable) {
    heap_.push(s.account.id, compute_bid(s.account));
  } else {
    heap_.erase(s.account.id);
  }
}

void Auctioneer::add_agent(const AgentAccount& account, bool runnable) {
  if (accounts_.contains(account.id)) {
    throw Error(Errc::invalid_account, "duplicate agent " + std::to_string(account.id));
  }
  if (account.balance.is_negative()) {
    throw Error(Errc::invalid_account, "negative balance");
  }
  compute_bid(account);  // rejects q <= 0
  const Slot& s = accounts_[account.id] = Slot{account, runnable};
  refresh_bid(s);
}

AgentAccount Auctioneer::remove_agent(AgentId id) {
  const AgentAccount acct = slot(id).account;
  heap_.erase(id);
  std::erase_if(reservations_, [id](const Reservation& r) { return r.agent == id; });
  accounts_.erase(id);
  return acct;
}

const AgentAccount& Auctioneer::account(AgentId id) const { return slot(id).account; }

std::vector<AgentId> Auctioneer::agents() const {
  std::vector<AgentId> ids;
  ids.reserve(accounts_.size());
  for (const auto& [id, s] : accounts_) ids.push_back(id);
  return ids;
}

void Auctioneer::set_runnable(AgentId id, bool runnable) {
  Slot& s = slot(id);
  if (s.runnable == runnable) return;
  s.runnable = runnable;
  refresh_bid(s);
}

bool Auctioneer::runnable(AgentId id) const { return slot(id).runnable; }

void Auctioneer::fund(AgentId id, Credits amount) {
  Slot& s = slot(id);
  sched::fund(s.account, amount);
  refresh_bid(s);
}

void Auctioneer::set_requested_cpu(AgentId id, double requested_cpu) {
  Slot& s = slot(id);
  AgentAccount next = s.account;
  next.requested_cpu = requested_cpu;
  compute_bid(next);
  s.account = next;
  refresh_bid(s);
}

double Auctioneer::reserved_fraction() const {
  double total = 0.0;
  for (const Reservation& r : reservations_) {
    if (r.active()) total += r.fraction;
  }
  return total;
}

double Auctioneer::quote(double fraction, int period) const {
  return quote_reservation(prices_, fraction, period, reserved_fraction(), config_);
}

const Reservation& Auctioneer::accept(AgentId id, double quote_value, double fraction,
                                      int period) {
  // Re-checks capacity: another reservation may have been accepted since the quote.
  quote_reservation(prices_, fraction, period, reserved_fraction(), config_);
  Slot& s = slot(id);
  const Credits before = s.account.balance;
  Reservation r = accept_reservation(quote_value, fraction, period, s.account, next_sequence_++);
  revenue_ += before - s.account.balance;
  refresh_bid(s);
  reservations_.push_back(r);
  return reservations_.back();
}

SliceOutcome Auctioneer::run_slice(double elapsed) {
  if (!(elapsed > 0.0) || elapsed > config_.timeslice_length) {
    throw Error(Errc::invalid_elapsed, "elapsed must lie in (0, timeslice_length]");
  }
  SliceOutcome out;

  const Reservation* proxy = nullptr;
  for (const Reservation& r : reservations_) {
    if (!reservation_pending(r)) continue;
    if (proxy == nullptr || r.sequence < proxy->sequence) proxy = &r;
  }

  if (proxy != nullptr) {
    // Prepaid slice: nothing is charged, the price recorded is the best spot bid.
    out.winner = proxy->agent;
    out.by_reservation = true;
    if (auto best = heap_.best_excluding(proxy->agent)) out.clearing_price = best->bid;
  } else if (!heap_.empty()) {
    const BidHeap::Entry top = heap_.top();
    std::optional<double> second;
    if (config_.price_mode == PriceMode::second_price) {
      const auto ru = heap_.runner_up();
      second = ru ? ru->bid : 0.0;
    }
    Slot& s = slot(top.agent);
    out.winner = top.agent;
    out.clearing_price = second.value_or(top.bid);
    out.payment = charge(s.account, elapsed, config_, second);
    revenue_ += out.payment;
    refresh_bid(s);
  }

  if (out.winner) {
    prices_.push(out.clearing_price);
    for (Reservation& r : reservations_) advance_reservation(r, r.agent == *out.winner);
  } else {
    for (Reservation& r : reservations_) advance_reservation(r, false);
  }
  std::erase_if(reservations_, [](const Reservation& r) { return !r.active(); });
  return out;
}

Credits Auctioneer::total_balance() const {
  Credits total;
  for (const auto& [id, s] : accounts_) total += s.account.balance;
  return total;
}

}  // namespace tycoon::sched
