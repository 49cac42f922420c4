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

#include "tycoon/harness/network.hpp"

#include <algorithm>
#include <tuple>

#include "tycoon/common/error.hpp"

namespace tycoon::harness {

const char* to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::transfer: return "TRANSFER";
    case MessageKind::fund_auctioneer: return "FUND_AUCTIONEER";
    case MessageKind::query_progress: return "QUERY_PROGRESS";
    case MessageKind::progress_report: return "PROGRESS_REPORT";
    case MessageKind::advertise: return "ADVERTISE";
    case MessageKind::lookup: return "LOOKUP";
    case MessageKind::lookup_result: return "LOOKUP_RESULT";
    case MessageKind::kill_child: return "KILL_CHILD";
    case MessageKind::spawn_child: return "SPAWN_CHILD";
  }
  return "UNKNOWN";
}

bool Network::Order::operator()(const Message& a, const Message& b) const {
  return std::tie(a.delivery_time, a.sender, a.seq) < std::tie(b.delivery_time, b.sender, b.seq);
}

Network::Network(NetworkConfig config) : config_(config), rng_(make_rng(config.seed, 0x6e6574)) {
  if (!(config.latency >= 0.0)) throw Error(Errc::invalid_config, "latency must be >= 0");
  if (!(config.drop_probability >= 0.0 && config.drop_probability <= 1.0)) {
    throw Error(Errc::invalid_config, "drop_probability must lie in [0, 1]");
  }
}

bool Network::send(Message m, double now) {
  ++sent_;
  m.send_time = now;
  m.seq = next_seq_++;
  if (config_.drop_probability > 0.0 && bernoulli(rng_, config_.drop_probability)) {
    ++dropped_;
    return false;
  }
  double& last = last_delivery_[{m.sender, m.recipient}];
  m.delivery_time = std::max(now + config_.latency, last);
  last = m.delivery_time;
  queue_.insert(std::move(m));
  return true;
}

std::optional<Message> Network::pop_due(double now) {
  if (queue_.empty() || queue_.begin()->delivery_time > now) return std::nullopt;
  auto node = queue_.extract(queue_.begin());
  ++delivered_;
  return std::move(node.value());
}

}  // namespace tycoon::harness
