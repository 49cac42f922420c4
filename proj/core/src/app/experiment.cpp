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

#include "tycoon/app/experiment.hpp"

#include <cmath>
#include <system_error>

#include "tycoon/common/error.hpp"
#include "tycoon/common/parallel.hpp"
#include "tycoon/harness/scenario.hpp"
#include "tycoon/market/market_sim.hpp"

namespace tycoon::app {

namespace {

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
  int n = 0;
};

Stats stats(const std::vector<double>& xs) {
  Stats s;
  s.n = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= s.n;
  if (s.n > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (s.n - 1));
  }
  return s;
}

std::string fmt(double v) { return format_double(v); }
std::string fmt(bool v) { return v ? "true" : "false"; }
std::string fmt(Credits c) { return format_double(c.to_double()); }
template <typename I>
  requires std::is_integral_v<I>
std::string fmt(I v) {
  return std::to_string(v);
}

class Writer {
 public:
  Writer(std::filesystem::path dir, std::string hash) : dir_(std::move(dir)), hash_(std::move(hash)) {}

  void write(const char* name, const CsvTable& table) {
    const auto path = dir_ / name;
    emit_csv(table, path, {"config-hash: " + hash_});
    out_.files.push_back(path);
  }

  ExperimentOutput done() { return std::move(out_); }

 private:
  std::filesystem::path dir_;
  std::string hash_;
  ExperimentOutput out_;
};

void run_table1(const ExperimentConfig& c, const std::vector<std::uint64_t>& seeds, Writer& w) {
  const auto rows = table1_rows();
  std::vector<host::HostSimConfig> configs;
  for (const Table1Row& r : rows) {
    for (std::uint64_t seed : seeds) {
      host::HostSimConfig h = c.host;
      h.scheduler = r.scheduler;
      h.web_share = r.web_share;
      h.web_yields = r.yields;
      h.seed = seed;
      configs.push_back(h);
    }
  }
  std::vector<host::HostMetrics> metrics(configs.size());
  parallel_for(configs.size(), c.threads,
               [&](std::size_t i) { metrics[i] = host::run_host_sim(configs[i]); });

  CsvTable summary;
  summary.header = {"scheduler",       "web_share",         "yields",
                    "error_mean",      "error_stddev",      "latency_ms_mean",
                    "latency_ms_stddev", "utilization_mean", "seeds"};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<double> err;
    std::vector<double> lat;
    std::vector<double> util;
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      const host::HostMetrics& m = metrics[r * seeds.size() + k];
      err.push_back(m.scheduling_error);
      util.push_back(m.utilization);
      if (m.mean_latency) lat.push_back(*m.mean_latency * 1000.0);
    }
    const Stats e = stats(err);
    const Stats l = stats(lat);
    summary.rows.push_back({host::to_string(rows[r].scheduler), fmt(rows[r].web_share),
                            fmt(rows[r].yields), fmt(e.mean), fmt(e.stddev),
                            l.n > 0 ? fmt(l.mean) : "", l.n > 0 ? fmt(l.stddev) : "",
                            fmt(stats(util).mean), fmt(static_cast<int>(seeds.size()))});
  }
  w.write("table1.csv", summary);
  w.write("table1_runs.csv", host_metrics_table(configs, metrics));
}

void run_figure1(const ExperimentConfig& c, const std::vector<std::uint64_t>& seeds, Writer& w) {
  CsvTable t;
  t.header = {"interarrival", "behavior", "utility_mean", "utility_stddev", "seeds"};
  for (market::Behavior b : {market::Behavior::obedient, market::Behavior::strategic_no_market,
                             market::Behavior::strategic_market}) {
    market::MarketConfig m = c.market;
    m.behavior = b;
    for (const auto& p : market::sweep_load(m, c.interarrivals, seeds, c.threads)) {
      t.rows.push_back({fmt(p.interarrival), market::to_string(p.behavior), fmt(p.utility_mean),
                        fmt(p.utility_stddev), fmt(p.seeds)});
    }
  }
  w.write("figure1.csv", t);
}

void run_host(const ExperimentConfig& c, const std::vector<std::uint64_t>& seeds, Writer& w) {
  std::vector<host::HostSimConfig> configs;
  for (std::uint64_t seed : seeds) {
    host::HostSimConfig h = c.host;
    h.seed = seed;
    configs.push_back(h);
  }
  std::vector<host::HostMetrics> metrics(configs.size());
  parallel_for(configs.size(), c.threads,
               [&](std::size_t i) { metrics[i] = host::run_host_sim(configs[i]); });
  w.write("host.csv", host_metrics_table(configs, metrics));
}

void run_market(const ExperimentConfig& c, const std::vector<std::uint64_t>& seeds, Writer& w) {
  std::vector<market::UtilityResult> results(seeds.size());
  parallel_for(seeds.size(), c.threads, [&](std::size_t i) {
    market::MarketConfig m = c.market;
    m.seed = seeds[i];
    results[i] = market::run_market_sim(m);
  });
  CsvTable t;
  t.header = {"seed", "interarrival", "behavior", "utility", "offered_utility",
              "tasks_arrived", "tasks_on_time"};
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& r = results[i];
    t.rows.push_back({fmt(seeds[i]), fmt(r.mean_interarrival), market::to_string(r.behavior),
                      fmt(r.utility), fmt(r.offered_utility), fmt(r.tasks_arrived),
                      fmt(r.tasks_on_time)});
  }
  w.write("market.csv", t);
}

void run_harness(const ExperimentConfig& c, const std::vector<std::uint64_t>& seeds, Writer& w) {
  std::vector<harness::ScenarioReport> reports(seeds.size());
  parallel_for(seeds.size(), c.threads, [&](std::size_t i) {
    harness::ScenarioConfig s = c.harness;
    s.seed = seeds[i];
    reports[i] = harness::run_harness_scenario(s);
  });
  CsvTable users;
  users.header = {"seed", "user", "initial", "final_balance", "spent", "earned",
                  "progress", "replacements", "starvations"};
  CsvTable hosts;
  hosts.header = {"seed", "host", "alive", "speed", "revenue", "utilization", "occupancy"};
  CsvTable events;
  events.header = {"seed", "time", "kind", "user", "host", "amount"};
  CsvTable audit;
  // Ledger totals stay in exact integer nano-credits.
  audit.header = {"seed",           "issued_nanocredits", "balance_nanocredits",
                  "stranded_nanocredits", "audit_checks", "audit_failures",
                  "messages_delivered", "messages_dropped", "conserved"};
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& r = reports[i];
    const std::string seed = fmt(seeds[i]);
    for (const auto& u : r.users) {
      users.rows.push_back({seed, fmt(u.user), fmt(u.initial), fmt(u.final_balance), fmt(u.spent),
                            fmt(u.earned), fmt(u.progress), fmt(u.replacements),
                            fmt(u.starvations)});
    }
    for (const auto& h : r.hosts) {
      std::string occ;
      for (const auto& [user, frac] : h.occupancy) {
        if (!occ.empty()) occ += ';';
        occ += std::to_string(user) + ":" + fmt(frac);
      }
      hosts.rows.push_back({seed, fmt(h.host), fmt(h.alive), fmt(h.speed), fmt(h.revenue),
                            fmt(h.utilization), occ});
    }
    for (const auto& e : r.events) {
      events.rows.push_back({seed, fmt(e.time), e.kind, e.user < 0 ? "" : fmt(e.user),
                             e.host < 0 ? "" : fmt(e.host), fmt(e.amount)});
    }
    // Ledger totals are printed in nano-credits so equality is visible exactly.
    audit.rows.push_back({seed, fmt(r.total_issued.units()), fmt(r.total_balance.units()),
                          fmt(r.stranded.units()), fmt(r.audit_checks), fmt(r.audit_failures),
                          fmt(r.messages_delivered), fmt(r.messages_dropped),
                          fmt(r.ledger_conserved())});
  }
  w.write("harness_users.csv", users);
  w.write("harness_hosts.csv", hosts);
  w.write("harness_events.csv", events);
  w.write("harness_audit.csv", audit);
}

}  // namespace

std::vector<Table1Row> table1_rows() {
  using host::SchedulerKind;
  return {{SchedulerKind::proportional_share, 0.1, true},
          {SchedulerKind::proportional_share, 0.7, true},
          {SchedulerKind::proportional_share, 0.7, false},
          {SchedulerKind::auction_share, 0.1, true},
          {SchedulerKind::auction_share, 0.1, false}};
}

CsvTable host_metrics_table(const std::vector<host::HostSimConfig>& configs,
                            const std::vector<host::HostMetrics>& metrics) {
  CsvTable t;
  t.header = {"scheduler", "web_share", "yields", "error", "mean_latency_ms", "utilization", "seed"};
  for (std::size_t i = 0; i < configs.size() && i < metrics.size(); ++i) {
    const auto& c = configs[i];
    const auto& m = metrics[i];
    t.rows.push_back({host::to_string(c.scheduler), fmt(m.web_share), fmt(c.web_yields),
                      fmt(m.scheduling_error),
                      m.mean_latency ? fmt(*m.mean_latency * 1000.0) : "", fmt(m.utilization),
                      fmt(c.seed)});
  }
  return t;
}

ExperimentOutput run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir) {
  config.validate();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::io_error, "cannot create " + out_dir.string() + ": " + ec.message());

  const auto seeds = config.resolved_seeds();
  Writer w(out_dir, config_hash(config));
  switch (config.experiment) {
    case ExperimentKind::table1: run_table1(config, seeds, w); break;
    case ExperimentKind::figure1: run_figure1(config, seeds, w); break;
    case ExperimentKind::host: run_host(config, seeds, w); break;
    case ExperimentKind::market: run_market(config, seeds, w); break;
    case ExperimentKind::harness: run_harness(config, seeds, w); break;
  }
  return w.done();
}

}  // namespace tycoon::app
