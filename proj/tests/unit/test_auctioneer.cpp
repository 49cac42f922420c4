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

#include "doctest.h"
#include "tycoon/common/error.hpp"
#include "tycoon/common/rng.hpp"
#include "tycoon/sched/auctioneer.hpp"

using namespace tycoon;
using namespace tycoon::sched;

namespace {

AgentAccount agent(AgentId id, double balance, double q) {
  AgentAccount a;
  a.id = id;
  a.balance = Credits::from_double(balance);
  a.requested_cpu = q;
  a.expected_funding_interval = q;
  return a;
}

}  // namespace

TEST_CASE("auctioneer runs first- and second-price rounds") {
  SchedulerConfig c;
  Auctioneer first(c);
  first.add_agent(agent(1, 100, 10));
  first.add_agent(agent(2, 40, 10));
  auto out = first.run_slice();
  CHECK(out.winner == AgentId{1});
  CHECK(out.payment == Credits::from_double(10));
  CHECK(out.clearing_price == 10.0);

  c.price_mode = PriceMode::second_price;
  Auctioneer second(c);
  second.add_agent(agent(1, 100, 10));
  second.add_agent(agent(2, 40, 10));
  out = second.run_slice();
  CHECK(out.winner == AgentId{1});
  CHECK(out.payment == Credits::from_double(4));
  CHECK(second.account(1).balance == Credits::from_double(96));
  CHECK(second.revenue() == Credits::from_double(4));
}

TEST_CASE("auctioneer idles with no runnable agents") {
  Auctioneer a;
  a.add_agent(agent(1, 10, 1), false);
  const auto out = a.run_slice();
  CHECK_FALSE(out.winner.has_value());
  CHECK(out.payment.is_zero());
  CHECK(a.price_stats().empty());
  a.set_runnable(1, true);
  CHECK(a.run_slice().winner == AgentId{1});
}

TEST_CASE("auctioneer rejects duplicates and unknown ids") {
  Auctioneer a;
  a.add_agent(agent(1, 10, 1));
  CHECK_THROWS_AS(a.add_agent(agent(1, 5, 1)), Error);
  CHECK_THROWS_AS(a.add_agent(agent(2, 5, 0)), Error);
  CHECK_THROWS_AS(a.fund(9, Credits{}), Error);
  CHECK_THROWS_AS(a.run_slice(0.0), Error);
  const AgentAccount gone = a.remove_agent(1);
  CHECK(gone.balance == Credits::from_double(10));
  CHECK_FALSE(a.has_agent(1));
}

TEST_CASE("property: balances plus revenue are conserved between fundings") {
  Rng rng = make_rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    SchedulerConfig c;
    c.price_mode = trial % 2 ? PriceMode::first_price : PriceMode::second_price;
    Auctioneer a(c);
    Credits injected;
    Credits removed;
    for (AgentId id = 0; id < 8; ++id) {
      const AgentAccount acct = agent(id, 1.0 + 99.0 * uniform01(rng), 1.0 + rng() % 50);
      a.add_agent(acct);
      injected += acct.balance;
    }
    for (int step = 0; step < 2000; ++step) {
      const auto id = static_cast<AgentId>(rng() % 8);
      switch (rng() % 8) {
        case 0: {
          const Credits amt = Credits::from_double(10.0 * uniform01(rng));
          if (a.has_agent(id)) {
            a.fund(id, amt);
            injected += amt;
          }
          break;
        }
        case 1:
          if (a.has_agent(id)) a.set_runnable(id, !a.runnable(id));
          break;
        case 2:
          if (a.has_agent(id) && a.agents().size() > 2) removed += a.remove_agent(id).balance;
          break;
        case 3:
          if (!a.price_stats().empty() && a.has_agent(id)) {
            try {
              const double r = 0.05 + 0.2 * uniform01(rng);
              const int p = 1 + static_cast<int>(rng() % 20);
              a.accept(id, a.quote(r, p), r, p);
            } catch (const Error&) {
              // Rejections change nothing.
            }
          }
          break;
        default:
          a.run_slice(c.timeslice_length * (0.1 + 0.9 * uniform01(rng)));
          break;
      }
      REQUIRE((a.total_balance() + a.revenue() + removed) == injected);
    }
  }
}

TEST_CASE("proxy wins are free and priced at the best spot bid") {
  SchedulerConfig c;
  c.price_mode = PriceMode::second_price;
  Auctioneer a(c);
  a.add_agent(agent(1, 1000, 10));
  a.add_agent(agent(2, 500, 10));
  a.add_agent(agent(3, 200, 10));
  a.run_slice();  // agent 1 wins and pays 50
  const double q = a.quote(0.5, 4);
  const Reservation& r = a.accept(3, q, 0.5, 4);
  CHECK(r.agent == 3);
  const Credits before = a.account(3).balance;
  const auto out = a.run_slice();
  CHECK(out.by_reservation);
  CHECK(out.winner == AgentId{3});
  CHECK(out.payment.is_zero());
  CHECK(out.clearing_price == doctest::Approx(95.0));  // best spot bid left: agent 1 at 950/10
  CHECK(a.account(3).balance == before);
}

TEST_CASE("accept re-checks the reservation limit") {
  Auctioneer a;
  a.add_agent(agent(1, 1000, 1000));
  a.run_slice();
  const double q = a.quote(0.4, 10);
  a.accept(1, q, 0.4, 10);
  CHECK(a.reserved_fraction() == doctest::Approx(0.4));
  try {
    a.accept(1, q, 0.2, 10);
    FAIL("expected a rejection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity_rejected);
  }
}
