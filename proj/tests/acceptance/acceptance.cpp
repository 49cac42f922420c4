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

// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tycoon/app/config.hpp"
#include "tycoon/app/experiment.hpp"
#include "tycoon/common/error.hpp"
#include "tycoon/common/parallel.hpp"
#include "tycoon/common/rng.hpp"
#include "tycoon/harness/scenario.hpp"
#include "tycoon/host/host_sim.hpp"
#include "tycoon/market/market_sim.hpp"
#include "tycoon/sched/auction_share.hpp"
#include "tycoon/sched/auctioneer.hpp"
#include "tycoon/sched/proportional_share.hpp"

using namespace tycoon;
namespace fs = std::filesystem;

namespace {

int passed = 0;
int failed = 0;

void verdict(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  (ok ? passed : failed)++;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---- table1 rows ---------------------------------------------------------

struct Cell {
  double error = 0.0;
  double latency = 0.0;  // seconds, 0 when the run saw no requests
};

std::vector<std::vector<Cell>> table1_runs(int seeds) {
  const auto rows = app::table1_rows();
  std::vector<std::vector<Cell>> out(rows.size(), std::vector<Cell>(seeds));
  parallel_for(rows.size() * seeds, 0, [&](std::size_t k) {
    const std::size_t r = k / seeds;
    const std::size_t s = k % seeds;
    host::HostSimConfig c;
    c.scheduler = rows[r].scheduler;
    c.web_share = rows[r].web_share;
    c.web_yields = rows[r].yields;
    c.seed = s + 1;
    const host::HostMetrics m = host::run_host_sim(c);
    out[r][s] = {m.scheduling_error, m.mean_latency.value_or(0.0)};
  });
  return out;
}

double mean_of(const std::vector<Cell>& v, double Cell::*f) {
  double sum = 0.0;
  for (const Cell& c : v) sum += c.*f;
  return sum / static_cast<double>(v.size());
}

void criterion_1_2(const std::vector<std::vector<Cell>>& runs) {
  enum { ps1y, ps7y, ps7n, as1y, as1n };
  double e[5];
  double l[5];
  for (int r = 0; r < 5; ++r) {
    e[r] = mean_of(runs[r], &Cell::error);
    l[r] = mean_of(runs[r], &Cell::latency) * 1000.0;
  }
  const bool ok1 = e[ps1y] <= 0.15 && l[ps1y] >= 60 && l[ps1y] <= 110 && e[ps7y] <= 0.03 &&
                   l[ps7y] <= 7 && e[ps7n] >= 0.8 && e[as1y] <= 0.03 && l[as1y] <= 7 &&
                   e[as1n] <= 0.05 && l[as1n] >= 60;
  verdict(1, ok1, "table1 bands over 30 seeds",
          fmt("PS1/10y err %.3f lat %.1fms; PS7/10y err %.3f lat %.1fms; PS7/10n err %.2f; "
              "AS1/10y err %.3f lat %.1fms; AS1/10n err %.3f lat %.1fms",
              e[ps1y], l[ps1y], e[ps7y], l[ps7y], e[ps7n], e[as1y], l[as1y], e[as1n], l[as1n]));

  const std::size_t seeds = runs[0].size();
  int a = 0;
  int b = 0;
  int c = 0;
  double worst_ratio = 1e300;
  for (std::size_t s = 0; s < seeds; ++s) {
    if (runs[as1y][s].latency * 5.0 <= runs[ps1y][s].latency) ++a;
    bool dominant = true;
    for (int r : {ps1y, ps7y, as1y, as1n}) {
      dominant = dominant && runs[ps7n][s].error > 10.0 * runs[r][s].error;
    }
    if (dominant) ++b;
    const double ratio = runs[as1y][s].latency > 0.0
                             ? runs[as1n][s].latency / runs[as1y][s].latency
                             : 1e300;
    worst_ratio = std::min(worst_ratio, ratio);
    if (ratio >= 10.0 && runs[as1n][s].error <= 0.05) ++c;
  }
  const int n = static_cast<int>(seeds);
  verdict(2, a == n && b == n && c == n, "table1 ordering on every seed",
          fmt("AS-y 5x faster than PS-1/10 on %d/%d; PS-no-yield error >10x others on %d/%d; "
              "AS misreport >=10x own latency with error<=0.05 on %d/%d (worst ratio %.1fx)",
              a, n, b, n, c, n, worst_ratio));
}

// ---- figure1 sweep -------------------------------------------------------

void criterion_3() {
  market::MarketConfig base;
  const std::vector<double> xs{140, 120, 100, 80, 60, 50, 40, 20};
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= 10; ++s) seeds.push_back(s);
  using market::Behavior;
  std::map<std::pair<double, Behavior>, double> u;
  for (Behavior b : {Behavior::obedient, Behavior::strategic_no_market, Behavior::strategic_market}) {
    market::MarketConfig m = base;
    m.behavior = b;
    for (const auto& p : market::sweep_load(m, xs, seeds)) u[{p.interarrival, b}] = p.utility_mean;
  }
  auto at = [&](double x, Behavior b) { return u.at({x, b}); };

  // Load is (users / X) * size / hosts, so saturation sits at X = 100 and 2x at X = 50.
  const double saturation = base.num_users * base.size_mean / base.num_hosts;
  const double twice = saturation / 2.0;
  const double sa = at(twice, Behavior::strategic_no_market);
  const double oa = at(twice, Behavior::obedient);
  const bool a = sa < 0.1 * oa;

  bool b = true;
  double worst_b = 1e300;
  for (double x : xs) {
    const double r = at(x, Behavior::strategic_market) / at(x, Behavior::obedient);
    worst_b = std::min(worst_b, r);
    b = b && r >= 0.75;
  }

  bool dropped = false;
  bool c = true;
  double drop_at = 0.0;
  for (double x : xs) {  // ordered by rising load
    if (x >= saturation) continue;
    const bool below = at(x, Behavior::strategic_no_market) < 0.5 * at(x, Behavior::obedient);
    if (dropped && !below) c = false;
    if (below && !dropped) {
      dropped = true;
      drop_at = x;
    }
  }
  c = c && dropped;

  std::string curve;
  for (double x : xs) {
    curve += fmt(" X=%g:%.3f/%.3f/%.3f", x, at(x, Behavior::obedient),
                 at(x, Behavior::strategic_no_market), at(x, Behavior::strategic_market));
  }
  verdict(3, a && b && c, "figure1 shape over 10 seeds",
          fmt("(a) strategic/obedient at 2x saturation %.3f (<0.1 %s); (b) worst market/obedient "
              "%.3f (>=0.75 %s); (c) non-recovering after X=%g %s; obedient/strategic/market:",
              sa / oa, a ? "ok" : "missed", worst_b, b ? "ok" : "missed", drop_at,
              c ? "ok" : "missed") +
              curve);
}

// ---- Oracles -------------------------------------------------------------

void criterion_4() {
  Rng rng = make_rng(4);
  int mismatches = 0;
  const int instances = 20000;
  for (int k = 0; k < instances; ++k) {
    const int n = 1 + static_cast<int>(rng() % 16);
    std::vector<sched::AgentAccount> v(n);
    for (int i = 0; i < n; ++i) {
      v[i].id = static_cast<sched::AgentId>(rng() % 1000);
      v[i].balance = Credits::from_units(static_cast<std::int64_t>(rng() % 50) * 1'000'000'000);
      v[i].requested_cpu = 1.0 + static_cast<double>(rng() % 8);
    }
    // Oracle: integer cross-multiplication, no division.
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      const std::int64_t lhs = v[i].balance.units() * static_cast<std::int64_t>(v[best].requested_cpu);
      const std::int64_t rhs = v[best].balance.units() * static_cast<std::int64_t>(v[i].requested_cpu);
      if (lhs > rhs || (lhs == rhs && v[i].id < v[best].id)) best = i;
    }
    if (sched::select_winner(v, {}) != v[best].id) ++mismatches;
  }

  int violations = 0;
  const int workloads = 500;
  for (int k = 0; k < workloads; ++k) {
    const int n = 2 + static_cast<int>(rng() % 9);
    sched::ProportionalShareScheduler ps;
    std::vector<double> w(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      w[i] = 1.0 + static_cast<double>(rng() % 10);
      total += w[i];
      ps.add_process(static_cast<sched::ProcessId>(i), w[i]);
    }
    std::vector<int> got(n, 0);
    for (int t = 0; t < 1000; ++t) ++got[*ps.run_slice()];
    for (int i = 0; i < n; ++i) {
      if (std::abs(got[i] - 1000.0 * w[i] / total) > 1.0 + 1e-9) ++violations;
    }
  }
  verdict(4, mismatches == 0 && violations == 0, "oracle equivalence",
          fmt("%d/%d winner mismatches; %d share violations over %d PS workloads of 1000 slices",
              mismatches, instances, violations, workloads));
}

void criterion_5() {
  // Host level: random fundings, sleeps, departures (crashed agents), reservations and slices.
  Rng rng = make_rng(5);
  long events = 0;
  long breaks = 0;
  for (int trial = 0; trial < 10; ++trial) {
    sched::SchedulerConfig c;
    c.price_mode = trial % 2 ? sched::PriceMode::first_price : sched::PriceMode::second_price;
    sched::Auctioneer a(c);
    Credits in;
    Credits out;
    sched::AgentId next = 0;
    auto join = [&] {
      sched::AgentAccount acct;
      acct.id = next++;
      acct.balance = Credits::from_double(100.0 * uniform01(rng));
      acct.requested_cpu = 1.0 + static_cast<double>(rng() % 100);
      a.add_agent(acct);
      in += acct.balance;
    };
    for (int i = 0; i < 6; ++i) join();
    for (int step = 0; step < 2000; ++step, ++events) {
      const auto ids = a.agents();
      const sched::AgentId id = ids[rng() % ids.size()];
      switch (rng() % 10) {
        case 0: {
          const Credits amt = Credits::from_double(20.0 * uniform01(rng));
          a.fund(id, amt);
          in += amt;
          break;
        }
        case 1: a.set_runnable(id, !a.runnable(id)); break;
        case 2:
          if (ids.size() > 2) out += a.remove_agent(id).balance;  // host-side fault
          join();
          break;
        case 3:
          if (!a.price_stats().empty()) {
            try {
              const double r = 0.05 + 0.3 * uniform01(rng);
              const int p = 1 + static_cast<int>(rng() % 30);
              a.accept(id, a.quote(r, p), r, p);
            } catch (const Error&) {
            }
          }
          break;
        default: a.run_slice(c.timeslice_length * (0.05 + 0.95 * uniform01(rng))); break;
      }
      if (a.total_balance() + a.revenue() + out != in) ++breaks;
    }
  }

  // Harness level: hosts fail, messages are late or lost, audits run after every step.
  long checks = 0;
  long failures = 0;
  std::uint64_t messages = 0;
  bool balanced = true;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    harness::ScenarioConfig s = harness::ScenarioConfig::example();
    s.seed = seed;
    s.duration = 1800;
    s.network = {0.4, 0.03, seed};
    s.faults = {{400.0, static_cast<harness::HostId>(seed % 3)}};
    const harness::ScenarioReport r = harness::run_harness_scenario(s);
    checks += r.audit_checks;
    failures += r.audit_failures;
    messages += r.messages_delivered + r.messages_dropped;
    balanced = balanced && r.total_issued == r.total_balance;
  }
  verdict(5, breaks == 0 && failures == 0 && balanced && events >= 10000 && messages >= 10000,
          "exact credit conservation",
          fmt("host: %ld breaks over %ld events; harness: %ld failed of %ld audits over %llu "
              "messages with faults and drops",
              breaks, events, failures, checks, static_cast<unsigned long long>(messages)));
}

void criterion_6() {
  Rng rng = make_rng(6);
  long shortfalls = 0;
  long boundaries = 0;
  double worst_quote = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    sched::SchedulerConfig c;
    c.reservation_capacity = 0.99;
    c.price_mode = trial % 2 ? sched::PriceMode::first_price : sched::PriceMode::second_price;
    sched::Auctioneer a(c);
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      sched::AgentAccount acct;
      acct.id = static_cast<sched::AgentId>(i);
      acct.balance = Credits::from_double(1000.0 * uniform01(rng));
      acct.requested_cpu = 0.1 + 20.0 * uniform01(rng);
      a.add_agent(acct);
    }
    sched::AgentAccount holder;
    holder.id = 999;
    holder.balance = Credits::from_double(1e9);
    holder.requested_cpu = 1e12;
    a.add_agent(holder);
    for (int warm = 0; warm < 1 + static_cast<int>(rng() % 20); ++warm) a.run_slice();

    const double r = 0.01 + 0.98 * uniform01(rng);
    const int p = 1 + static_cast<int>(rng() % 300);
    const double q = a.quote(r, p);
    const double expect = (a.price_stats().mean() + a.price_stats().stddev()) * r * p;
    worst_quote = std::max(worst_quote, std::abs(q - expect) / std::max(expect, 1e-300));
    a.accept(999, q, r, p);
    int won = 0;
    for (int t = 1; t <= p; ++t) {
      if (a.run_slice().winner == sched::AgentId{999}) ++won;
      ++boundaries;
      if (won < static_cast<int>(std::floor(r * t))) ++shortfalls;
      if (rng() % 3 == 0) {
        a.fund(static_cast<sched::AgentId>(rng() % n), Credits::from_double(500.0 * uniform01(rng)));
      }
    }
  }
  verdict(6, shortfalls == 0 && worst_quote <= 1e-9, "reservation fulfillment",
          fmt("%ld shortfalls over %ld slice boundaries; worst quote relative error %.2e",
              shortfalls, boundaries, worst_quote));
}

// ---- Determinism ---------------------------------------------------------

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream f(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    files[e.path().filename().string()] = ss.str();
  }
  return files;
}

void criterion_7() {
  const fs::path root = fs::temp_directory_path() / "tycoon_acceptance_determinism";
  fs::remove_all(root);
  int identical = 0;
  int total = 0;
  std::string diffs;
  for (app::ExperimentKind k : {app::ExperimentKind::host, app::ExperimentKind::market,
                                app::ExperimentKind::harness, app::ExperimentKind::table1,
                                app::ExperimentKind::figure1}) {
    app::ExperimentConfig c;
    c.experiment = k;
    if (k == app::ExperimentKind::table1) c.seeds = {1, 2, 3, 4, 5};
    if (k == app::ExperimentKind::figure1) c.seeds = {1, 2, 3};
    const fs::path a = root / (std::string(app::to_string(k)) + "_a");
    const fs::path b = root / (std::string(app::to_string(k)) + "_b");
    c.threads = 0;
    app::run_experiment(c, a);
    c.threads = 1;  // a different schedule must not change a byte
    app::run_experiment(c, b);
    const auto fa = read_dir(a);
    const auto fb = read_dir(b);
    for (const auto& [name, body] : fa) {
      ++total;
      const auto it = fb.find(name);
      if (it != fb.end() && it->second == body) {
        ++identical;
      } else {
        diffs += " " + name;
      }
    }
    if (fa.size() != fb.size()) diffs += " (file sets differ)";
  }
  fs::remove_all(root);
  verdict(7, identical == total && diffs.empty() && total > 0, "byte-identical reruns",
          fmt("%d/%d files identical across 5 experiments%s", identical, total,
              diffs.empty() ? "" : ("; differing:" + diffs).c_str()));
}

// ---- Complexity ----------------------------------------------------------

double comparisons_per_slice(int n) {
  sched::SchedulerConfig c;
  c.price_mode = sched::PriceMode::second_price;
  sched::Auctioneer a(c);
  Rng rng = make_rng(8, static_cast<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    sched::AgentAccount acct;
    acct.id = static_cast<sched::AgentId>(i);
    acct.balance = Credits::from_double(1.0 + 1000.0 * uniform01(rng));
    acct.requested_cpu = 1.0 + 100.0 * uniform01(rng);
    a.add_agent(acct);
  }
  const int slices = 5000;
  a.reset_comparisons();
  for (int s = 0; s < slices; ++s) {
    a.run_slice();
    // Steady income keeps the bid set moving, as funding does on a live host.
    const auto id = static_cast<sched::AgentId>(rng() % n);
    a.fund(id, Credits::from_double(uniform01(rng)));
  }
  return static_cast<double>(a.comparisons()) / slices;
}

void criterion_8() {
  const int ns[] = {4, 64, 1024};
  double per[3];
  double c[3];
  for (int i = 0; i < 3; ++i) {
    per[i] = comparisons_per_slice(ns[i]);
    c[i] = per[i] / std::log2(static_cast<double>(ns[i]));
  }
  // Logarithmic growth keeps cmp/log2(n) flat; super-logarithmic growth makes it climb.
  const bool ok = c[2] <= 1.25 * c[1] && c[1] <= 1.25 * std::max(c[0], 1.0);
  verdict(8, ok, "winner selection is O(log n)",
          fmt("cmp/slice n=4: %.2f, n=64: %.2f, n=1024: %.2f; cmp/log2(n): %.2f, %.2f, %.2f",
              per[0], per[1], per[2], c[0], c[1], c[2]));
}

}  // namespace

int main() {
  const auto runs = table1_runs(30);
  criterion_1_2(runs);
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("acceptance: %d criteria evaluated, %d passed, %d failed\n", passed + failed,
              passed, failed);
  return failed == 0 ? 0 : 1;
}
