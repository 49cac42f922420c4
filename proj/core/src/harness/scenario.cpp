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

#include "tycoon/harness/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "tycoon/common/error.hpp"
#include "tycoon/common/rng.hpp"
#include "tycoon/harness/sls.hpp"
#include "tycoon/sched/auctioneer.hpp"

namespace tycoon::harness {

namespace {

constexpr double kNever = -std::numeric_limits<double>::infinity();

std::string host_name(HostId h) { return "host:" + std::to_string(h); }
std::string parent_name(std::uint32_t u) { return "parent:" + std::to_string(u); }
AccountId user_account(std::uint32_t u) { return "user:" + std::to_string(u); }
AccountId escrow_account(HostId h) { return "escrow:" + std::to_string(h); }

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_config, what);
}

struct ChildOnHost {
  double interval = 0.0;     // seconds a lump should last
  double refresh_at = 0.0;   // end of the current lump interval
  double runnable_at = 0.0;  // end of the migration overhead
  double progress = 0.0;
  Credits cost;
  bool refresh_requested = false;
};

struct HostState {
  HostSpec spec;
  AccountId escrow;
  AccountId provider;
  bool alive = true;
  sched::Auctioneer auction;
  std::map<std::uint32_t, ChildOnHost> children;
  double next_advertise = 0.0;
  long live = 0;
  long busy = 0;
  std::map<std::uint32_t, double> occupancy;  // seconds
  // Escrow audit: escrow == child balances + pending_in + pending_out + stranded.
  Credits pending_in;
  Credits pending_out;
  Credits stranded;
};

struct ParentState {
  UserSpec spec;
  AccountId account;
  Credits lump;
  double lump_interval = 0.0;  // seconds
  bool started = false;
  std::vector<ChildAgentState> children;
  std::vector<HostId> known_hosts;
  std::map<HostId, double> spawned_at;
  std::map<HostId, double> last_report;
  double last_query = kNever;
  Credits committed;  // transfers sent but not yet executed by the bank
  UserReport report;
  Rng rng;
};

class Scenario {
 public:
  explicit Scenario(const ScenarioConfig& cfg);
  ScenarioReport run();

 private:
  HostState* host(HostId h);
  ParentState* parent(std::uint32_t u);
  void event(const char* kind, std::int64_t user, std::int64_t host, double amount = 0.0);

  void send(Message m);
  void deliver_due();
  void handle(const Message& m);
  void handle_bank(const Message& m);
  void handle_sls(const Message& m);
  void handle_host(HostState& h, const Message& m);
  void handle_parent(ParentState& p, const Message& m);

  void spawn(ParentState& p, HostId h);
  void kill(ParentState& p, HostId h);
  void fund_child(ParentState& p, HostId h);
  void monitor(ParentState& p);
  void run_host_slice(HostState& h);
  void refund(HostState& h, std::uint32_t user, Credits amount);
  void audit();

  const ScenarioConfig& cfg_;
  double now_ = 0.0;
  Bank bank_;
  ServiceLocationService sls_;
  Network net_;
  std::vector<HostState> hosts_;
  std::vector<ParentState> parents_;
  ScenarioReport report_;
};

Scenario::Scenario(const ScenarioConfig& cfg) : cfg_(cfg), net_([&] {
  NetworkConfig n = cfg.network;
  n.seed = mix_seed(cfg.seed, n.seed);
  return n;
}()) {
  sched::SchedulerConfig sc;
  sc.timeslice_length = cfg.slice;
  sc.price_mode = sched::PriceMode::first_price;
  bank_.open("admin");
  for (const HostSpec& spec : cfg.hosts) {
    HostState h{spec, escrow_account(spec.id), "", true, sched::Auctioneer(sc), {}, 0.0, 0, 0, {}, {}, {}, {}};
    h.provider = (cfg.policy == FundingPolicyKind::closed_loop && spec.owner)
                     ? user_account(*spec.owner)
                     : "provider:" + std::to_string(spec.id);
    bank_.open(h.escrow);
    bank_.open(h.provider);
    hosts_.push_back(std::move(h));
  }
  for (const UserSpec& spec : cfg.users) {
    ParentState p{spec, user_account(spec.id), {}, 0.0, false, {}, {}, {}, {}, kNever, {}, {},
                  make_rng(cfg.seed, 1000 + spec.id)};
    p.lump = Credits::from_double(parent_budget(spec.parent) * spec.lump_minutes);
    p.lump_interval = spec.lump_minutes * 60.0;
    p.report.user = spec.id;
    p.report.initial = spec.parent.total_credits;
    bank_.issue(p.account, spec.parent.total_credits);
    parents_.push_back(std::move(p));
  }
}

HostState* Scenario::host(HostId h) {
  for (HostState& s : hosts_) {
    if (s.spec.id == h) return &s;
  }
  return nullptr;
}

ParentState* Scenario::parent(std::uint32_t u) {
  for (ParentState& p : parents_) {
    if (p.spec.id == u) return &p;
  }
  return nullptr;
}

void Scenario::event(const char* kind, std::int64_t user, std::int64_t host, double amount) {
  report_.events.push_back({now_, kind, user, host, amount});
}

void Scenario::send(Message m) {
  const Message copy = m;
  if (net_.send(std::move(m), now_)) return;
  // Lost in transit. The auditor settles the books; no component learns of it.
  if (copy.kind == MessageKind::fund_auctioneer) {
    if (HostState* h = host(copy.host)) {
      h->pending_in -= copy.amount;
      h->stranded += copy.amount;
    }
  } else if (copy.kind == MessageKind::transfer) {
    if (copy.from_account.starts_with("escrow:")) {
      if (HostState* h = host(copy.host)) {
        h->pending_out -= copy.amount;
        h->stranded += copy.amount;
      }
    } else if (ParentState* p = parent(copy.user); p && copy.from_account == p->account) {
      p->committed -= copy.amount;
    }
  }
}

void Scenario::deliver_due() {
  while (auto m = net_.pop_due(now_)) handle(*m);
}

void Scenario::handle(const Message& m) {
  if (m.recipient == "bank") return handle_bank(m);
  if (m.recipient == "sls") return handle_sls(m);
  if (m.recipient.starts_with("host:")) {
    HostState* h = host(static_cast<HostId>(std::stoul(m.recipient.substr(5))));
    if (h == nullptr) return;
    if (!h->alive) {
      // A dead host swallows everything; funds sent to it stay in escrow.
      if (m.kind == MessageKind::fund_auctioneer) {
        h->pending_in -= m.amount;
        h->stranded += m.amount;
      }
      return;
    }
    return handle_host(*h, m);
  }
  if (m.recipient.starts_with("parent:")) {
    if (ParentState* p = parent(static_cast<std::uint32_t>(std::stoul(m.recipient.substr(7))))) {
      handle_parent(*p, m);
    }
  }
}

void Scenario::handle_bank(const Message& m) {
  if (m.kind != MessageKind::transfer) return;
  HostState* h = host(m.host);
  ParentState* p = parent(m.user);
  const bool from_escrow = m.from_account.starts_with("escrow:");
  if (p != nullptr && m.from_account == p->account) p->committed -= m.amount;
  try {
    bank_.transfer(m.from_account, m.to_account, m.amount);
  } catch (const Error&) {
    // Only parent-initiated transfers can fail; escrow moves are pre-audited.
    event("transfer_failed", m.user, m.host, m.amount.to_double());
    return;
  }
  if (from_escrow && h != nullptr) h->pending_out -= m.amount;
  if (m.payment && m.to_account.starts_with("user:")) {
    const auto owner = static_cast<std::uint32_t>(std::stoul(m.to_account.substr(5)));
    if (ParentState* o = parent(owner)) o->report.earned += m.amount;
  }
  if (m.fund_after && h != nullptr) {
    h->pending_in += m.amount;
    Message f;
    f.sender = "bank";
    f.recipient = host_name(m.host);
    f.kind = MessageKind::fund_auctioneer;
    f.amount = m.amount;
    f.user = m.user;
    f.host = m.host;
    send(std::move(f));
  }
}

void Scenario::handle_sls(const Message& m) {
  if (m.kind == MessageKind::advertise) {
    sls_.advertise(m.host, HostResources{m.speed}, now_, cfg_.sls_ttl);
  } else if (m.kind == MessageKind::lookup) {
    Message r;
    r.sender = "sls";
    r.recipient = m.sender;
    r.kind = MessageKind::lookup_result;
    r.user = m.user;
    r.hosts = sls_.lookup(now_);
    send(std::move(r));
  }
}

void Scenario::refund(HostState& h, std::uint32_t user, Credits amount) {
  if (amount.is_zero()) return;
  h.pending_out += amount;
  Message t;
  t.sender = host_name(h.spec.id);
  t.recipient = "bank";
  t.kind = MessageKind::transfer;
  t.from_account = h.escrow;
  t.to_account = user_account(user);
  t.amount = amount;
  t.user = user;
  t.host = h.spec.id;
  send(std::move(t));
  event("refund", user, h.spec.id, amount.to_double());
}

void Scenario::handle_host(HostState& h, const Message& m) {
  switch (m.kind) {
    case MessageKind::spawn_child: {
      if (h.children.contains(m.user)) return;
      const double horizon = std::max(1.0, m.interval / cfg_.slice);
      sched::AgentAccount a;
      a.id = m.user;
      a.expected_funding_interval = horizon;
      a.requested_cpu = horizon;
      h.auction.add_agent(a, false);
      ChildOnHost c;
      c.interval = m.interval;
      c.refresh_at = now_ + m.interval;
      c.runnable_at = now_ + cfg_.migration_overhead;
      h.children[m.user] = c;
      return;
    }
    case MessageKind::fund_auctioneer: {
      h.pending_in -= m.amount;
      auto it = h.children.find(m.user);
      if (it == h.children.end()) {
        refund(h, m.user, m.amount);
        return;
      }
      h.auction.fund(m.user, m.amount);
      it->second.refresh_at = now_ + it->second.interval;
      it->second.refresh_requested = false;
      return;
    }
    case MessageKind::kill_child: {
      if (!h.children.contains(m.user)) return;
      const sched::AgentAccount a = h.auction.remove_agent(m.user);
      h.children.erase(m.user);
      refund(h, m.user, a.balance);
      return;
    }
    case MessageKind::query_progress: {
      auto it = h.children.find(m.user);
      if (it == h.children.end()) return;
      Message r;
      r.sender = host_name(h.spec.id);
      r.recipient = m.sender;
      r.kind = MessageKind::progress_report;
      r.user = m.user;
      r.host = h.spec.id;
      r.progress = it->second.progress;
      r.cost = it->second.cost;
      send(std::move(r));
      return;
    }
    default:
      return;
  }
}

void Scenario::handle_parent(ParentState& p, const Message& m) {
  if (m.kind == MessageKind::lookup_result) {
    p.known_hosts = m.hosts;
    if (p.started) return;
    p.started = true;
    // Initial placement: uniform random sample of the advertised hosts.
    std::vector<HostId> pool = m.hosts;
    const std::size_t k = std::min<std::size_t>(pool.size(), p.spec.parent.num_hosts);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(p.rng() % (pool.size() - i));
      std::swap(pool[i], pool[j]);
      spawn(p, pool[i]);
    }
    return;
  }
  if (m.kind != MessageKind::progress_report) return;
  auto child = std::find_if(p.children.begin(), p.children.end(),
                            [&](const ChildAgentState& c) { return c.host == m.host; });
  if (child == p.children.end()) return;
  child->progress = m.progress;
  child->cost = m.cost;
  p.last_report[m.host] = now_;
  if (m.starving) fund_child(p, m.host);
}

void Scenario::fund_child(ParentState& p, HostId h) {
  const Credits available = bank_.balance(p.account) - p.committed;
  const Credits amount = min(p.lump, available);
  if (!(amount > Credits{})) {
    ++p.report.starvations;
    event("starving", p.spec.id, h);
    return;
  }
  p.committed += amount;
  event("fund", p.spec.id, h, amount.to_double());
  for (ChildAgentState& c : p.children) {
    if (c.host == h) c.held += amount;
  }
  Message t;
  t.sender = parent_name(p.spec.id);
  t.recipient = "bank";
  t.kind = MessageKind::transfer;
  t.from_account = p.account;
  t.to_account = escrow_account(h);
  t.amount = amount;
  t.fund_after = true;
  t.user = p.spec.id;
  t.host = h;
  send(std::move(t));
}

void Scenario::spawn(ParentState& p, HostId h) {
  ChildAgentState c;
  c.host = h;
  p.children.push_back(c);
  p.spawned_at[h] = now_;
  Message s;
  s.sender = parent_name(p.spec.id);
  s.recipient = host_name(h);
  s.kind = MessageKind::spawn_child;
  s.user = p.spec.id;
  s.host = h;
  s.interval = p.lump_interval;
  send(std::move(s));
  event("spawn", p.spec.id, h);
  fund_child(p, h);
}

void Scenario::kill(ParentState& p, HostId h) {
  std::erase_if(p.children, [h](const ChildAgentState& c) { return c.host == h; });
  Message k;
  k.sender = parent_name(p.spec.id);
  k.recipient = host_name(h);
  k.kind = MessageKind::kill_child;
  k.user = p.spec.id;
  k.host = h;
  send(std::move(k));
  event("kill", p.spec.id, h);
}

void Scenario::monitor(ParentState& p) {
  for (ChildAgentState& c : p.children) {
    const auto rep = p.last_report.find(c.host);
    const bool reported = rep != p.last_report.end() && rep->second >= p.last_query;
    c.responsive = reported || p.spawned_at[c.host] >= p.last_query;
  }
  const auto actions =
      parent_monitor_and_replace(p.children, p.spec.parent.theta, p.known_hosts, p.rng);
  for (const ReplacementAction& a : actions) {
    kill(p, a.kill_host);
    spawn(p, a.spawn_host);
    ++p.report.replacements;
  }
  p.last_query = now_;
  for (const ChildAgentState& c : p.children) {
    Message q;
    q.sender = parent_name(p.spec.id);
    q.recipient = host_name(c.host);
    q.kind = MessageKind::query_progress;
    q.user = p.spec.id;
    q.host = c.host;
    send(std::move(q));
  }
  Message l;
  l.sender = parent_name(p.spec.id);
  l.recipient = "sls";
  l.kind = MessageKind::lookup;
  l.user = p.spec.id;
  send(std::move(l));
}

void Scenario::run_host_slice(HostState& h) {
  if (!h.alive) return;
  ++h.live;
  for (auto& [user, c] : h.children) {
    h.occupancy[user] += cfg_.slice;
    h.auction.set_runnable(user, now_ >= c.runnable_at);
    // Bid so the lump lasts until the planned refresh.
    h.auction.set_requested_cpu(user, std::max(1.0, (c.refresh_at - now_) / cfg_.slice));
  }
  const sched::SliceOutcome out = h.auction.run_slice();
  if (!out.winner) return;
  ++h.busy;
  ChildOnHost& c = h.children.at(*out.winner);
  c.progress += h.spec.speed * cfg_.slice;
  c.cost += out.payment;
  if (ParentState* p = parent(*out.winner)) {
    p->report.progress += h.spec.speed * cfg_.slice;
    p->report.spent += out.payment;
  }
  if (out.payment > Credits{}) {
    h.pending_out += out.payment;
    Message t;
    t.sender = host_name(h.spec.id);
    t.recipient = "bank";
    t.kind = MessageKind::transfer;
    t.from_account = h.escrow;
    t.to_account = h.provider;
    t.amount = out.payment;
    t.payment = true;
    t.user = *out.winner;
    t.host = h.spec.id;
    send(std::move(t));
    if (h.auction.account(*out.winner).balance.is_zero() && !c.refresh_requested) {
      c.refresh_requested = true;
      Message r;
      r.sender = host_name(h.spec.id);
      r.recipient = parent_name(*out.winner);
      r.kind = MessageKind::progress_report;
      r.user = *out.winner;
      r.host = h.spec.id;
      r.progress = c.progress;
      r.cost = c.cost;
      r.starving = true;
      send(std::move(r));
    }
  }
}

void Scenario::audit() {
  ++report_.audit_checks;
  if (bank_.total_balance() != bank_.total_issued()) ++report_.audit_failures;
  for (const HostState& h : hosts_) {
    ++report_.audit_checks;
    const Credits expected =
        h.auction.total_balance() + h.pending_in + h.pending_out + h.stranded;
    if (bank_.balance(h.escrow) != expected) ++report_.audit_failures;
  }
}

ScenarioReport Scenario::run() {
  const long steps = static_cast<long>(std::ceil(cfg_.duration / cfg_.slice - 1e-9));
  std::vector<FaultSpec> faults = cfg_.faults;
  std::stable_sort(faults.begin(), faults.end(),
                   [](const FaultSpec& a, const FaultSpec& b) { return a.time < b.time; });
  std::size_t next_fault = 0;
  double next_funding = cfg_.funding_interval;
  double next_monitor = cfg_.monitor_interval;

  for (long k = 0; k < steps; ++k) {
    now_ = static_cast<double>(k) * cfg_.slice;
    for (; next_fault < faults.size() && faults[next_fault].time <= now_; ++next_fault) {
      if (HostState* h = host(faults[next_fault].host); h && h->alive) {
        h->alive = false;
        event("host_failed", -1, h->spec.id);
      }
    }
    if (cfg_.policy == FundingPolicyKind::open_loop && now_ >= next_funding) {
      FundingPolicy policy;
      for (const ParentState& p : parents_) policy.incomes.emplace_back(p.account, p.spec.income);
      for (const HostState& h : hosts_) policy.providers.push_back(h.provider);
      apply_funding_policy(bank_, policy);
      next_funding += cfg_.funding_interval;
    }
    for (HostState& h : hosts_) {
      if (!h.alive || now_ < h.next_advertise) continue;
      Message a;
      a.sender = host_name(h.spec.id);
      a.recipient = "sls";
      a.kind = MessageKind::advertise;
      a.host = h.spec.id;
      a.speed = h.spec.speed;
      send(std::move(a));
      h.next_advertise += cfg_.advertise_interval;
    }
    const bool monitor_now = now_ >= next_monitor;
    if (monitor_now) next_monitor += cfg_.monitor_interval;
    for (ParentState& p : parents_) {
      if (k == 0) {
        Message l;
        l.sender = parent_name(p.spec.id);
        l.recipient = "sls";
        l.kind = MessageKind::lookup;
        l.user = p.spec.id;
        send(std::move(l));
      } else if (monitor_now) {
        monitor(p);
      }
    }
    deliver_due();
    for (HostState& h : hosts_) run_host_slice(h);
    deliver_due();
    audit();
  }

  now_ = static_cast<double>(steps) * cfg_.slice;
  deliver_due();
  audit();

  const double duration = static_cast<double>(steps) * cfg_.slice;
  for (ParentState& p : parents_) {
    p.report.final_balance = bank_.balance(p.account);
    report_.users.push_back(p.report);
  }
  for (const HostState& h : hosts_) {
    HostReport r;
    r.host = h.spec.id;
    r.alive = h.alive;
    r.speed = h.spec.speed;
    r.revenue = h.auction.revenue();
    r.utilization = h.live > 0 ? static_cast<double>(h.busy) / h.live : 0.0;
    for (const auto& [user, secs] : h.occupancy) r.occupancy[user] = secs / duration;
    report_.stranded += h.stranded;
    report_.hosts.push_back(r);
  }
  report_.total_issued = bank_.total_issued();
  report_.total_balance = bank_.total_balance();
  report_.messages_delivered = net_.delivered();
  report_.messages_dropped = net_.dropped();
  return std::move(report_);
}

}  // namespace

ScenarioConfig ScenarioConfig::example() {
  ScenarioConfig c;
  for (HostId h = 0; h < 3; ++h) c.hosts.push_back(HostSpec{h, 1.0, std::nullopt});
  for (std::uint32_t u = 1; u <= 2; ++u) {
    UserSpec s;
    s.id = u;
    s.parent.total_credits = Credits::from_double(200.0);
    s.parent.deadline_minutes = 10.0;
    s.parent.num_hosts = 2;
    s.parent.theta = 0.5;
    s.income = Credits::from_double(10.0);
    s.lump_minutes = 2.0;
    c.users.push_back(s);
  }
  return c;
}

void ScenarioConfig::validate() const {
  require(!hosts.empty(), "scenario needs at least one host");
  std::set<HostId> hid;
  for (const HostSpec& h : hosts) {
    require(hid.insert(h.id).second, "duplicate host id");
    require(h.speed > 0.0, "host speed must be positive");
  }
  std::set<std::uint32_t> uid;
  for (const UserSpec& u : users) {
    require(uid.insert(u.id).second, "duplicate user id");
    require(!u.parent.total_credits.is_negative(), "total_credits must be non-negative");
    require(u.parent.num_hosts > 0 && u.parent.deadline_minutes > 0.0,
            "parent spec needs hosts and a deadline");
    require(u.parent.theta >= 0.0, "theta must be non-negative");
    require(!u.income.is_negative(), "income must be non-negative");
    require(u.lump_minutes > 0.0, "lump_minutes must be positive");
  }
  for (const HostSpec& h : hosts) {
    if (h.owner) require(uid.contains(*h.owner), "host owner is not a user");
  }
  require(duration > 0.0 && slice > 0.0, "duration and slice must be positive");
  require(funding_interval > 0.0, "funding_interval must be positive");
  require(monitor_interval > 0.0, "monitor_interval must be positive");
  require(migration_overhead >= 0.0, "migration_overhead must be non-negative");
  require(sls_ttl > 0.0 && advertise_interval > 0.0, "sls_ttl and advertise_interval must be positive");
}

ScenarioReport run_harness_scenario(const ScenarioConfig& config) {
  config.validate();
  return Scenario(config).run();
}

}  // namespace tycoon::harness
