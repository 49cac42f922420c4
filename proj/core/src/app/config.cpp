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

#include "tycoon/app/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tycoon/common/error.hpp"

namespace tycoon::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::invalid_config, what); }

// Reads fields from one JSON object and rejects any key nobody asked for.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_ + " must be an object");
  }
  ~Reader() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) fail("unknown key " + where(key));
    }
  }

  const json* find(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  template <typename T>
  void get(const char* key, T& out) {
    if (const json* v = find(key)) {
      try {
        out = v->get<T>();
      } catch (const json::exception& e) {
        fail(where(key) + ": " + e.what());
      }
    }
  }

  void credits(const char* key, Credits& out) {
    double v = out.to_double();
    get(key, v);
    out = Credits::from_double(v);
  }

  template <typename E, typename Parse>
  void enumeration(const char* key, E& out, Parse parse) {
    std::string name;
    if (!find(key)) return;
    get(key, name);
    const auto e = parse(name);
    if (!e) fail(where(key) + ": unknown value '" + name + "'");
    out = *e;
  }

  std::string where(std::string_view key) const { return path_ + "." + std::string(key); }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::optional<host::SchedulerKind> parse_scheduler(std::string_view s) {
  if (s == "proportional_share" || s == "ps") return host::SchedulerKind::proportional_share;
  if (s == "auction_share" || s == "as") return host::SchedulerKind::auction_share;
  return std::nullopt;
}

std::optional<sched::PriceMode> parse_price_mode(std::string_view s) {
  if (s == "first_price") return sched::PriceMode::first_price;
  if (s == "second_price") return sched::PriceMode::second_price;
  return std::nullopt;
}

const char* to_string(sched::PriceMode m) {
  return m == sched::PriceMode::first_price ? "first_price" : "second_price";
}

std::optional<harness::FundingPolicyKind> parse_policy(std::string_view s) {
  if (s == "open_loop") return harness::FundingPolicyKind::open_loop;
  if (s == "closed_loop") return harness::FundingPolicyKind::closed_loop;
  return std::nullopt;
}

json host_to_json(const host::HostSimConfig& h) {
  return json{{"scheduler", host::to_string(h.scheduler)},
              {"num_timeslices", h.num_timeslices},
              {"timeslice_length", h.timeslice_length},
              {"weights", h.weights},
              {"web_share", h.web_share ? json(*h.web_share) : json(nullptr)},
              {"web_intended_share", h.web_intended_share},
              {"request_probability", h.request_probability},
              {"service_demand", h.service_demand},
              {"web_yields", h.web_yields},
              {"funding_interval", h.funding_interval},
              {"bid_horizon", h.bid_horizon},
              {"price_mode", to_string(h.price_mode)},
              {"warmup", h.warmup}};
}

void host_from_json(const json& j, host::HostSimConfig& h) {
  Reader r(j, "host");
  r.enumeration("scheduler", h.scheduler, parse_scheduler);
  r.get("num_timeslices", h.num_timeslices);
  r.get("timeslice_length", h.timeslice_length);
  r.get("weights", h.weights);
  if (const json* v = r.find("web_share")) {
    if (v->is_null()) {
      h.web_share.reset();
    } else {
      double s = 0.0;
      r.get("web_share", s);
      h.web_share = s;
    }
  }
  r.get("web_intended_share", h.web_intended_share);
  r.get("request_probability", h.request_probability);
  r.get("service_demand", h.service_demand);
  r.get("web_yields", h.web_yields);
  r.get("funding_interval", h.funding_interval);
  r.get("bid_horizon", h.bid_horizon);
  r.enumeration("price_mode", h.price_mode, parse_price_mode);
  r.get("warmup", h.warmup);
}

json market_to_json(const market::MarketConfig& m, const std::vector<double>& xs) {
  return json{{"num_users", m.num_users},
              {"num_hosts", m.num_hosts},
              {"duration", m.duration},
              {"mean_task_interarrival", m.mean_task_interarrival},
              {"size_mean", m.size_mean},
              {"deadline_mean", m.deadline_mean},
              {"max_weight", m.max_weight},
              {"income_rate", m.income_rate},
              {"behavior", market::to_string(m.behavior)},
              {"per_user_arrivals", m.per_user_arrivals},
              {"spread_across_hosts", m.spread_across_hosts},
              {"interarrivals", xs}};
}

void market_from_json(const json& j, market::MarketConfig& m, std::vector<double>& xs) {
  Reader r(j, "market");
  r.get("num_users", m.num_users);
  r.get("num_hosts", m.num_hosts);
  r.get("duration", m.duration);
  r.get("mean_task_interarrival", m.mean_task_interarrival);
  r.get("size_mean", m.size_mean);
  r.get("deadline_mean", m.deadline_mean);
  r.get("max_weight", m.max_weight);
  r.get("income_rate", m.income_rate);
  r.enumeration("behavior", m.behavior, market::parse_behavior);
  r.get("per_user_arrivals", m.per_user_arrivals);
  r.get("spread_across_hosts", m.spread_across_hosts);
  r.get("interarrivals", xs);
}

json harness_to_json(const harness::ScenarioConfig& s) {
  json hosts = json::array();
  for (const auto& h : s.hosts) {
    hosts.push_back({{"id", h.id}, {"speed", h.speed},
                     {"owner", h.owner ? json(*h.owner) : json(nullptr)}});
  }
  json users = json::array();
  for (const auto& u : s.users) {
    users.push_back({{"id", u.id},
                     {"total_credits", u.parent.total_credits.to_double()},
                     {"deadline_minutes", u.parent.deadline_minutes},
                     {"num_hosts", u.parent.num_hosts},
                     {"theta", u.parent.theta},
                     {"income", u.income.to_double()},
                     {"lump_minutes", u.lump_minutes}});
  }
  json faults = json::array();
  for (const auto& f : s.faults) faults.push_back({{"time", f.time}, {"host", f.host}});
  return json{{"policy", harness::to_string(s.policy)},
              {"funding_interval", s.funding_interval},
              {"duration", s.duration},
              {"slice", s.slice},
              {"monitor_interval", s.monitor_interval},
              {"migration_overhead", s.migration_overhead},
              {"sls_ttl", s.sls_ttl},
              {"advertise_interval", s.advertise_interval},
              {"network", {{"latency", s.network.latency},
                           {"drop_probability", s.network.drop_probability}}},
              {"hosts", hosts},
              {"users", users},
              {"faults", faults}};
}

void harness_from_json(const json& j, harness::ScenarioConfig& s) {
  Reader r(j, "harness");
  r.enumeration("policy", s.policy, parse_policy);
  r.get("funding_interval", s.funding_interval);
  r.get("duration", s.duration);
  r.get("slice", s.slice);
  r.get("monitor_interval", s.monitor_interval);
  r.get("migration_overhead", s.migration_overhead);
  r.get("sls_ttl", s.sls_ttl);
  r.get("advertise_interval", s.advertise_interval);
  if (const json* n = r.find("network")) {
    Reader nr(*n, "harness.network");
    nr.get("latency", s.network.latency);
    nr.get("drop_probability", s.network.drop_probability);
  }
  if (const json* hs = r.find("hosts")) {
    if (!hs->is_array()) fail("harness.hosts must be an array");
    s.hosts.clear();
    for (const json& e : *hs) {
      Reader hr(e, "harness.hosts[]");
      harness::HostSpec h;
      hr.get("id", h.id);
      hr.get("speed", h.speed);
      if (const json* o = hr.find("owner"); o && !o->is_null()) {
        std::uint32_t owner = 0;
        hr.get("owner", owner);
        h.owner = owner;
      }
      s.hosts.push_back(h);
    }
  }
  if (const json* us = r.find("users")) {
    if (!us->is_array()) fail("harness.users must be an array");
    s.users.clear();
    for (const json& e : *us) {
      Reader ur(e, "harness.users[]");
      harness::UserSpec u;
      ur.get("id", u.id);
      ur.credits("total_credits", u.parent.total_credits);
      ur.get("deadline_minutes", u.parent.deadline_minutes);
      ur.get("num_hosts", u.parent.num_hosts);
      ur.get("theta", u.parent.theta);
      ur.credits("income", u.income);
      ur.get("lump_minutes", u.lump_minutes);
      s.users.push_back(u);
    }
  }
  if (const json* fs = r.find("faults")) {
    if (!fs->is_array()) fail("harness.faults must be an array");
    s.faults.clear();
    for (const json& e : *fs) {
      Reader fr(e, "harness.faults[]");
      harness::FaultSpec f;
      fr.get("time", f.time);
      fr.get("host", f.host);
      s.faults.push_back(f);
    }
  }
}

json to_json(const ExperimentConfig& c, bool with_runtime) {
  json j{{"experiment", to_string(c.experiment)},
         {"seeds", c.seeds},
         {"repetitions", c.repetitions},
         {"host", host_to_json(c.host)},
         {"market", market_to_json(c.market, c.interarrivals)},
         {"harness", harness_to_json(c.harness)}};
  if (with_runtime) {
    j["output_dir"] = c.output_dir;
    j["threads"] = c.threads;
  }
  return j;
}

ExperimentConfig from_json(const json& j) {
  ExperimentConfig c;
  Reader r(j, "config");
  r.enumeration("experiment", c.experiment, parse_experiment);
  if (const json* s = r.find("seeds")) {
    if (s->is_string()) {
      c.seeds = parse_seed_range(s->get<std::string>());
    } else if (s->is_number_unsigned()) {
      c.seeds = {s->get<std::uint64_t>()};
    } else {
      r.get("seeds", c.seeds);
    }
  }
  r.get("repetitions", c.repetitions);
  r.get("output_dir", c.output_dir);
  r.get("threads", c.threads);
  if (const json* h = r.find("host")) host_from_json(*h, c.host);
  if (const json* m = r.find("market")) market_from_json(*m, c.market, c.interarrivals);
  if (const json* h = r.find("harness")) harness_from_json(*h, c.harness);
  return c;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    fail("bad seed '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::host: return "host";
    case ExperimentKind::market: return "market";
    case ExperimentKind::harness: return "harness";
    case ExperimentKind::table1: return "table1";
    case ExperimentKind::figure1: return "figure1";
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment(std::string_view name) {
  for (ExperimentKind k : {ExperimentKind::host, ExperimentKind::market, ExperimentKind::harness,
                           ExperimentKind::table1, ExperimentKind::figure1}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> parse_seed_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) return {parse_u64(text)};
  const std::uint64_t a = parse_u64(text.substr(0, dots));
  const std::uint64_t b = parse_u64(text.substr(dots + 2));
  if (b < a) fail("empty seed range '" + std::string(text) + "'");
  if (b - a >= 1'000'000) fail("seed range too large");
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = a; s <= b; ++s) out.push_back(s);
  return out;
}

std::vector<std::uint64_t> ExperimentConfig::resolved_seeds() const {
  std::vector<std::uint64_t> base = seeds;
  if (base.empty()) {
    switch (experiment) {
      case ExperimentKind::table1: base = parse_seed_range("1..30"); break;
      case ExperimentKind::figure1: base = parse_seed_range("1..10"); break;
      default: base = {42}; break;
    }
  }
  if (base.size() == 1 && repetitions > 1) {
    const std::uint64_t s = base.front();
    for (int k = 1; k < repetitions; ++k) base.push_back(s + static_cast<std::uint64_t>(k));
  }
  return base;
}

void ExperimentConfig::validate() const {
  if (repetitions < 1) fail("repetitions must be at least 1");
  if (interarrivals.empty()) fail("market.interarrivals must not be empty");
  for (double x : interarrivals) {
    if (!(x > 0.0)) fail("market.interarrivals must be positive");
  }
  host.validate();
  market.validate();
  harness.validate();
}

ExperimentConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig c = from_json(j);
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot read config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void apply_override(ExperimentConfig& config, std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    fail("override must look like key=value, got '" + std::string(assignment) + "'");
  }
  std::string pointer;
  std::string_view key = assignment.substr(0, eq);
  while (!key.empty()) {
    const std::size_t dot = key.find('.');
    pointer += "/" + std::string(key.substr(0, dot));
    key = dot == std::string_view::npos ? std::string_view{} : key.substr(dot + 1);
  }
  const std::string raw(assignment.substr(eq + 1));
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  json j = to_json(config, true);
  try {
    j[json::json_pointer(pointer)] = value;
  } catch (const json::exception& e) {
    fail("cannot apply override '" + std::string(assignment) + "': " + e.what());
  }
  ExperimentConfig next = from_json(j);
  next.validate();
  config = std::move(next);
}

std::string canonical_json(const ExperimentConfig& config) {
  json j = to_json(config, false);
  j["seeds"] = config.resolved_seeds();
  return j.dump();
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_json(config)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tycoon::app
