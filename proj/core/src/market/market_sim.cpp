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

#include <algorithm>
#include <cmath>

#include "tycoon/common/error.hpp"
#include "tycoon/common/parallel.hpp"
#include "tycoon/common/rng.hpp"
#include "tycoon/market/market_sim.hpp"

namespace tycoon::market {

namespace {

constexpr double kDoneEpsilon = 1e-9;

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_config, what);
}

// Draws tasks in arrival order. Per-user mode gives every user a private
// stream, so the task set of a seed is the same under every behavior.
class ArrivalSource {
 public:
  explicit ArrivalSource(const MarketConfig& cfg) : cfg_(cfg) {
    const std::size_t streams = cfg.per_user_arrivals ? cfg.num_users : 1;
    for (std::size_t k = 0; k < streams; ++k) {
      rngs_.push_back(make_rng(cfg.seed, 1 + k));
      next_.push_back(exponential(rngs_.back(), cfg.mean_task_interarrival));
    }
  }

  // Appends every task arriving before `until`.
  void drain(double until, std::vector<Task>& out) {
    for (std::size_t k = 0; k < rngs_.size(); ++k) {
      Rng& rng = rngs_[k];
      while (next_[k] < until) {
        Task t;
        t.arrival_time = next_[k];
        t.owner = cfg_.per_user_arrivals
                      ? static_cast<std::uint32_t>(k)
                      : static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(cfg_.num_users));
        t.size = static_cast<double>(std::max(1L, poisson(rng, cfg_.size_mean)));
        const double rel = std::max(static_cast<double>(poisson(rng, cfg_.deadline_mean)), t.size);
        t.deadline = t.arrival_time + rel;
        t.value = 1.0 - uniform01(rng);  // (0, 1]
        t.host = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(cfg_.num_hosts));
        out.push_back(t);
        next_[k] += exponential(rng, cfg_.mean_task_interarrival);
      }
    }
  }

 private:
  const MarketConfig& cfg_;
  std::vector<Rng> rngs_;
  std::vector<double> next_;
};

}  // namespace

void MarketConfig::validate() const {
  require(num_users > 0, "num_users must be positive");
  require(num_hosts > 0, "num_hosts must be positive");
  require(duration > 0, "duration must be positive");
  require(mean_task_interarrival > 0.0, "mean_task_interarrival must be positive");
  require(size_mean > 0.0, "size_mean must be positive");
  require(deadline_mean > 0.0, "deadline_mean must be positive");
  require(max_weight > 0.0, "max_weight must be positive");
  require(income_rate >= 0.0, "income_rate must be non-negative");
}

UtilityResult run_market_sim(const MarketConfig& cfg) {
  cfg.validate();
  const int hosts = cfg.num_hosts;
  const int budget_hosts = cfg.spread_across_hosts ? hosts : 1;

  UtilityResult res;
  res.mean_interarrival = cfg.mean_task_interarrival;
  res.behavior = cfg.behavior;
  res.users.resize(cfg.num_users);
  for (int u = 0; u < cfg.num_users; ++u) {
    MarketUser& mu = res.users[u];
    mu.id = static_cast<std::uint32_t>(u);
    mu.behavior = cfg.behavior;
    mu.income_rate = cfg.income_rate;
  }
  const Credits income = Credits::from_double(cfg.income_rate);

  ArrivalSource source(cfg);
  std::vector<Task> tasks;
  std::vector<std::size_t> active;
  std::vector<double> weight;
  std::vector<std::size_t> best(cfg.num_users);
  double total_utility = 0.0;
  double offered = 0.0;

  for (int step = 0; step < cfg.duration; ++step) {
    const double now = step;
    const std::size_t before = tasks.size();
    source.drain(now + 1.0, tasks);
    for (std::size_t i = before; i < tasks.size(); ++i) {
      active.push_back(i);
      offered += tasks[i].value * tasks[i].size;
    }
    // Tasks past their deadline can earn nothing and are dropped.
    std::erase_if(active, [&](std::size_t i) { return tasks[i].deadline <= now; });

    weight.assign(tasks.size(), 0.0);
    switch (cfg.behavior) {
      case Behavior::obedient:
        for (std::size_t i : active) weight[i] = obedient_weight(tasks[i]);
        break;
      case Behavior::strategic_no_market:
        for (std::size_t i : active) weight[i] = strategic_nomarket_weight(cfg.max_weight);
        break;
      case Behavior::strategic_market: {
        constexpr std::size_t kNone = static_cast<std::size_t>(-1);
        std::fill(best.begin(), best.end(), kNone);
        for (MarketUser& mu : res.users) {
          mu.balance += income;
          mu.income += income;
        }
        for (std::size_t i : active) {
          std::size_t& b = best[tasks[i].owner];
          if (b == kNone || tasks[i].value > tasks[b].value) b = i;
        }
        for (MarketUser& mu : res.users) {
          const std::size_t i = best[mu.id];
          if (i == kNone) continue;
          const auto w = market_budget_weight(mu.balance.to_double(), tasks[i].value,
                                              budget_hosts, tasks[i].deadline, now);
          if (!w || *w <= 0.0) continue;
          // Debit in whole nano-credits, then bid exactly what was paid.
          const Credits debit = min(Credits::from_double(*w * budget_hosts), mu.balance);
          mu.balance -= debit;
          mu.spent += debit;
          weight[i] = debit.to_double() / budget_hosts;
        }
        break;
      }
    }

    for (int h = 0; h < hosts; ++h) {
      std::vector<std::size_t> ids;
      std::vector<double> w;
      std::vector<double> rem;
      for (std::size_t i : active) {
        if (weight[i] <= 0.0 || tasks[i].finished) continue;
        if (!cfg.spread_across_hosts && tasks[i].host != static_cast<std::uint32_t>(h)) continue;
        ids.push_back(i);
        w.push_back(weight[i]);
        rem.push_back(tasks[i].remaining());
      }
      if (ids.empty()) continue;
      const std::vector<double> give = allocate_host_step(w, rem, 1.0);
      double host_work = 0.0;
      for (std::size_t k = 0; k < ids.size(); ++k) {
        Task& t = tasks[ids[k]];
        t.work_done = std::min(t.size, t.work_done + give[k]);
        host_work += give[k];
        if (t.remaining() <= kDoneEpsilon) t.finished = true;
      }
      res.max_host_step_work = std::max(res.max_host_step_work, host_work);
    }

    std::erase_if(active, [&](std::size_t i) {
      Task& t = tasks[i];
      if (!t.finished) return false;
      t.work_done = t.size;
      t.completion_time = now + 1.0;
      const double u = accrue_utility(t, t.completion_time);
      if (u > 0.0) {
        total_utility += u;
        ++res.tasks_on_time;
      }
      return true;
    });
  }

  const double scale = static_cast<double>(hosts) * cfg.duration;
  res.tasks_arrived = static_cast<long>(tasks.size());
  res.utility = total_utility / scale;
  res.offered_utility = offered / scale;
  return res;
}

std::vector<SweepPoint> sweep_load(const MarketConfig& base,
                                   std::span<const double> interarrivals,
                                   std::span<const std::uint64_t> seeds, unsigned threads) {
  if (interarrivals.empty()) throw Error(Errc::invalid_argument, "empty interarrival list");
  if (seeds.empty()) throw Error(Errc::invalid_argument, "empty seed list");
  const std::size_t cells = interarrivals.size() * seeds.size();
  std::vector<double> utility(cells, 0.0);
  parallel_for(cells, threads, [&](std::size_t c) {
    MarketConfig cfg = base;
    cfg.mean_task_interarrival = interarrivals[c / seeds.size()];
    cfg.seed = seeds[c % seeds.size()];
    utility[c] = run_market_sim(cfg).utility;
  });

  std::vector<SweepPoint> out;
  for (std::size_t x = 0; x < interarrivals.size(); ++x) {
    SweepPoint p;
    p.interarrival = interarrivals[x];
    p.behavior = base.behavior;
    p.seeds = static_cast<int>(seeds.size());
    double sum = 0.0;
    for (std::size_t s = 0; s < seeds.size(); ++s) sum += utility[x * seeds.size() + s];
    p.utility_mean = sum / p.seeds;
    if (p.seeds > 1) {
      double ss = 0.0;
      for (std::size_t s = 0; s < seeds.size(); ++s) {
        const double d = utility[x * seeds.size() + s] - p.utility_mean;
        ss += d * d;
      }
      p.utility_stddev = std::sqrt(ss / (p.seeds - 1));
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace tycoon::market
