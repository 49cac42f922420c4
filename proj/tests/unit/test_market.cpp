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

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "tycoon/common/error.hpp"
#include "tycoon/common/rng.hpp"
#include "tycoon/market/market_sim.hpp"

using namespace tycoon;
using namespace tycoon::market;

TEST_CASE("behavior weights") {
  Task t;
  t.value = 0.7;
  CHECK(obedient_weight(t) == 0.7);
  t.value = 1.0;
  CHECK(obedient_weight(t) == 1.0);
  CHECK(strategic_nomarket_weight(1.0) == 1.0);
  CHECK(strategic_nomarket_weight(10.0) == 10.0);

  Rng rng = make_rng(12);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    Task u;
    u.value = 1.0 - uniform01(rng);  // (0, 1]
    sum += obedient_weight(u);
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));

  CHECK(parse_behavior("strategic_market") == Behavior::strategic_market);
  CHECK_FALSE(parse_behavior("greedy").has_value());
}

TEST_CASE("budget weight") {
  CHECK(*market_budget_weight(100, 0.5, 10, 15, 10) == doctest::Approx(1.0));
  CHECK(*market_budget_weight(0, 0.5, 10, 15, 10) == 0.0);
  CHECK_FALSE(market_budget_weight(100, 0.5, 10, 10, 10).has_value());
  // Capped at balance / hosts when the deadline is near.
  CHECK(*market_budget_weight(100, 1.0, 10, 10.5, 10) == doctest::Approx(10.0));
  CHECK_THROWS_AS(market_budget_weight(100, 0.5, 0, 15, 10), Error);
}

TEST_CASE("water-filling allocation") {
  auto a = allocate_host_step(std::vector{1.0, 1.0}, std::vector{5.0, 5.0});
  CHECK(a[0] == doctest::Approx(0.5));
  CHECK(a[1] == doctest::Approx(0.5));
  a = allocate_host_step(std::vector{3.0, 1.0}, std::vector{0.1, 5.0});
  CHECK(a[0] == doctest::Approx(0.1));
  CHECK(a[1] == doctest::Approx(0.9));
  a = allocate_host_step(std::vector{2.0}, std::vector{0.4});
  CHECK(a[0] == doctest::Approx(0.4));
  a = allocate_host_step(std::vector{0.0, 0.0}, std::vector{1.0, 1.0});
  CHECK(a[0] == 0.0);
  CHECK(a[1] == 0.0);
}

TEST_CASE("equal weights give equal shares regardless of value") {
  Rng rng = make_rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    std::vector<double> w(n, strategic_nomarket_weight(1.0));
    std::vector<double> rem(n, 100.0);
    const auto a = allocate_host_step(w, rem);
    for (double x : a) CHECK(x == doctest::Approx(1.0 / n));
  }
}

TEST_CASE("property: allocations respect capacity and remaining work") {
  Rng rng = make_rng(45);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<double> w(n);
    std::vector<double> rem(n);
    for (int i = 0; i < n; ++i) {
      w[i] = rng() % 5 == 0 ? 0.0 : uniform01(rng);
      rem[i] = 2.0 * uniform01(rng);
    }
    const auto a = allocate_host_step(w, rem);
    double sum = 0.0;
    double demand = 0.0;
    for (int i = 0; i < n; ++i) {
      REQUIRE(a[i] >= 0.0);
      REQUIRE(a[i] <= rem[i] + 1e-12);
      sum += a[i];
      if (w[i] > 0.0) demand += rem[i];
    }
    REQUIRE(sum <= 1.0 + 1e-12);
    // Work-conserving: the step is full or every weighted task is done.
    REQUIRE(sum >= std::min(1.0, demand) - 1e-9);
  }
}

TEST_CASE("utility accrual") {
  Task t;
  t.value = 0.5;
  t.size = 4;
  t.deadline = 10;
  t.finished = true;
  CHECK(accrue_utility(t, 9.5) == 2.0);
  CHECK(accrue_utility(t, 10.0) == 2.0);
  CHECK(accrue_utility(t, 11.0) == 0.0);
  t.finished = false;
  CHECK(accrue_utility(t, 5.0) == 0.0);
}

TEST_CASE("market runs obey their bounds and conserve budgets") {
  for (Behavior b : {Behavior::obedient, Behavior::strategic_no_market,
                     Behavior::strategic_market}) {
    for (double x : {140.0, 100.0, 40.0}) {
      MarketConfig c;
      c.behavior = b;
      c.mean_task_interarrival = x;
      c.duration = 300;
      c.seed = 3;
      const UtilityResult r = run_market_sim(c);
      CHECK(r.utility >= 0.0);
      CHECK(r.utility <= 1.0);
      CHECK(r.utility <= r.offered_utility + 1e-12);
      CHECK(r.max_host_step_work <= 1.0 + 1e-12);
      CHECK(r.tasks_on_time <= r.tasks_arrived);
      for (const MarketUser& u : r.users) {
        CHECK(u.initial_balance + u.income - u.spent == u.balance);
        CHECK_FALSE(u.balance.is_negative());
      }
    }
  }
}

TEST_CASE("no arrivals means no utility") {
  MarketConfig c;
  c.mean_task_interarrival = 1e12;
  c.duration = 50;
  const UtilityResult r = run_market_sim(c);
  CHECK(r.tasks_arrived == 0);
  CHECK(r.utility == 0.0);
}

TEST_CASE("strategic users without a market collapse under overload") {
  MarketConfig c;
  c.mean_task_interarrival = 40;
  c.duration = 500;
  c.behavior = Behavior::obedient;
  const double obedient = run_market_sim(c).utility;
  c.behavior = Behavior::strategic_no_market;
  const double strategic = run_market_sim(c).utility;
  c.behavior = Behavior::strategic_market;
  const double market = run_market_sim(c).utility;
  CHECK(strategic < 0.5 * obedient);
  CHECK(market >= 0.75 * obedient);
}

TEST_CASE("sweep shape and thread-count independence") {
  MarketConfig c;
  c.duration = 200;
  const std::vector<double> xs{140, 120, 100, 80, 60, 40, 20};
  const std::vector<std::uint64_t> seeds{1, 2, 3};
  const auto one = sweep_load(c, xs, seeds, 1);
  const auto many = sweep_load(c, xs, seeds, 4);
  REQUIRE(one.size() == xs.size());
  REQUIRE(many.size() == one.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].interarrival == many[i].interarrival);
    CHECK(one[i].behavior == many[i].behavior);
    CHECK(one[i].utility_mean == many[i].utility_mean);
    CHECK(one[i].utility_stddev == many[i].utility_stddev);
    CHECK(one[i].seeds == 3);
  }
}

TEST_CASE("market config validation") {
  MarketConfig c;
  c.num_hosts = 0;
  CHECK_THROWS_AS(run_market_sim(c), Error);
  c = {};
  c.mean_task_interarrival = 0;
  CHECK_THROWS_AS(run_market_sim(c), Error);
}
