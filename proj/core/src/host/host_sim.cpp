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

#include "tycoon/host/host_sim.hpp"

#include <numeric>

#include "tycoon/common/error.hpp"
#include "tycoon/common/rng.hpp"
#include "tycoon/host/funding.hpp"
#include "tycoon/host/latency.hpp"
#include "tycoon/sched/auctioneer.hpp"
#include "tycoon/sched/proportional_share.hpp"
#include "tycoon/sched/scheduling_error.hpp"

namespace tycoon::host {

namespace {

constexpr double kWorkEpsilon = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_config, what);
}

// Wraps either scheduler behind the two calls the loop needs.
class Driver {
 public:
  Driver(const HostSimConfig& cfg, const std::vector<double>& w) {
    const double ts = cfg.timeslice_length;
    if (cfg.scheduler == SchedulerKind::proportional_share) {
      ps_.emplace(ts);
      for (std::size_t i = 0; i < w.size(); ++i) {
        ps_->add_process(static_cast<sched::ProcessId>(i), w[i], i != 0 || !cfg.web_yields);
      }
      return;
    }
    sched::SchedulerConfig sc;
    sc.timeslice_length = ts;
    sc.price_mode = cfg.price_mode;
    as_.emplace(sc);
    // q and E(t) in slices: b/q is then the price of one full slice.
    const double horizon = cfg.bid_horizon / ts;
    const double web_demand = cfg.request_probability * (cfg.service_demand / ts);
    // Equilibrium price per slice when every slice is sold: income per slice.
    const double price = std::accumulate(w.begin(), w.end(), 0.0) * ts;
    const double duration = cfg.num_timeslices * ts;
    for (std::size_t i = 0; i < w.size(); ++i) {
      sched::AgentAccount a;
      a.id = static_cast<sched::AgentId>(i);
      a.expected_funding_interval = horizon;
      a.requested_cpu =
          (i == 0 && cfg.web_yields && web_demand > 0.0) ? web_demand * horizon : horizon;
      a.balance = Credits::from_double(price * a.requested_cpu);
      as_->add_agent(a, i != 0 || !cfg.web_yields);
      funding_.push_back(
          gen_funding_events(w[i], duration, mix_seed(cfg.seed, 1 + i), cfg.funding_interval));
    }
    next_event_.assign(w.size(), 0);
  }

  void set_web_runnable(bool runnable) {
    if (ps_) ps_->set_runnable(0, runnable);
    if (as_) as_->set_runnable(0, runnable);
  }

  std::optional<std::uint32_t> run_slice(double now) {
    if (ps_) return ps_->run_slice();
    for (std::size_t i = 0; i < funding_.size(); ++i) {
      auto& k = next_event_[i];
      while (k < funding_[i].size() && funding_[i][k].time <= now) {
        as_->fund(static_cast<sched::AgentId>(i), funding_[i][k].amount);
        ++k;
      }
    }
    return as_->run_slice().winner;
  }

 private:
  std::optional<sched::ProportionalShareScheduler> ps_;
  std::optional<sched::Auctioneer> as_;
  std::vector<std::vector<FundingEvent>> funding_;
  std::vector<std::size_t> next_event_;
};

}  // namespace

const char* to_string(SchedulerKind kind) {
  return kind == SchedulerKind::proportional_share ? "proportional_share" : "auction_share";
}

void HostSimConfig::validate() const {
  require(num_timeslices > 0, "num_timeslices must be positive");
  require(timeslice_length > 0.0, "timeslice_length must be positive");
  require(!weights.empty(), "weights must list at least the web server");
  for (double w : weights) require(w > 0.0, "weights must be positive");
  if (web_share) require(*web_share > 0.0 && *web_share < 1.0, "web_share must lie in (0, 1)");
  require(web_intended_share > 0.0 && web_intended_share < 1.0,
          "web_intended_share must lie in (0, 1)");
  require(request_probability >= 0.0 && request_probability <= 1.0,
          "request_probability must lie in [0, 1]");
  require(service_demand > 0.0, "service_demand must be positive");
  require(warmup >= 0 && warmup < num_timeslices, "warmup must lie in [0, num_timeslices)");
  require(funding_interval > 0.0, "funding_interval must be positive");
  require(bid_horizon >= timeslice_length, "bid_horizon must cover at least one slice");
}

std::vector<double> HostSimConfig::effective_weights() const {
  std::vector<double> w = weights;
  if (web_share && w.size() > 1) {
    const double batch = std::accumulate(w.begin() + 1, w.end(), 0.0);
    w[0] = *web_share / (1.0 - *web_share) * batch;
  }
  return w;
}

HostMetrics run_host_sim(const HostSimConfig& cfg) {
  cfg.validate();
  const std::vector<double> w = cfg.effective_weights();
  const std::size_t n = w.size();
  const double ts = cfg.timeslice_length;
  Driver driver(cfg, w);
  Rng arrivals = make_rng(cfg.seed, 0);

  std::vector<long> won(n, 0);
  long busy = 0;
  double demand = 0.0;  // web CPU seconds requested inside the window
  std::vector<RequestRecord> records;
  bool pending = false;
  bool started = false;
  double remaining = 0.0;
  RequestRecord current;

  for (long s = 0; s < cfg.num_timeslices; ++s) {
    const double now = static_cast<double>(s) * ts;
    const bool measured = s >= cfg.warmup;
    // A busy web server takes no new request; otherwise it sleeps.
    if (!pending && bernoulli(arrivals, cfg.request_probability)) {
      pending = true;
      started = false;
      remaining = cfg.service_demand;
      current = RequestRecord{};
      current.arrival_slice = s;
      if (measured) demand += cfg.service_demand;
    }
    driver.set_web_runnable(pending || !cfg.web_yields);

    const auto winner = driver.run_slice(now);
    if (!winner) continue;
    if (measured) {
      ++won[*winner];
      ++busy;
    }
    if (*winner != 0 || !pending) continue;
    if (!started) {
      current.start_time = now;
      started = true;
    }
    const double served = std::min(remaining, ts);
    remaining -= served;
    if (remaining <= kWorkEpsilon) {
      current.completion_time = now + served;
      current.latency = current.start_time - static_cast<double>(current.arrival_slice) * ts;
      if (current.arrival_slice >= cfg.warmup) records.push_back(current);
      pending = false;
    }
  }

  HostMetrics m;
  const double window = static_cast<double>(cfg.num_timeslices - cfg.warmup);
  m.utilization = static_cast<double>(busy) / window;
  m.requests = static_cast<long>(records.size());
  if (!records.empty()) m.mean_latency = measure_latency(records);
  m.web_share = w[0] / std::accumulate(w.begin(), w.end(), 0.0);

  // Intended shares: a yielding web server is entitled to what it asked for,
  // a greedy one to its configured share; batch work splits the rest by weight.
  const double web_target =
      cfg.web_yields ? demand / (window * ts) : (n > 1 ? cfg.web_intended_share : 1.0);
  const double batch_total = std::accumulate(w.begin() + 1, w.end(), 0.0);
  m.intended.assign(n, 0.0);
  m.shares.assign(n, 0.0);
  m.intended[0] = n > 1 ? web_target : 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    m.intended[i] = std::max(0.0, 1.0 - web_target) * w[i] / batch_total;
  }
  sched::ShareMap actual;
  sched::ShareMap intended;
  for (std::size_t i = 0; i < n; ++i) {
    m.shares[i] = static_cast<double>(won[i]) / window;
    if (m.intended[i] > 0.0) {
      actual[static_cast<sched::ProcessId>(i)] = m.shares[i];
      intended[static_cast<sched::ProcessId>(i)] = m.intended[i];
    }
  }
  m.scheduling_error = sched::scheduling_error(actual, intended);
  return m;
}

}  // namespace tycoon::host
