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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tycoon/common/credits.hpp"
#include "tycoon/common/rng.hpp"

namespace tycoon::harness {

enum class MessageKind {
  transfer,
  fund_auctioneer,
  query_progress,
  progress_report,
  advertise,
  lookup,
  lookup_result,
  kill_child,
  spawn_child,
};

const char* to_string(MessageKind kind);

/// Flat envelope; each kind reads only the payload fields it needs.
struct Message {
  std::string sender;
  std::string recipient;
  MessageKind kind = MessageKind::transfer;

  std::string from_account;  // transfer
  std::string to_account;    // transfer
  Credits amount;            // transfer, fund_auctioneer
  bool fund_after = false;   // transfer: notify the host once the escrow is credited
  bool payment = false;      // transfer: auction charge moving from escrow to provider
  std::uint32_t user = 0;
  std::uint32_t host = 0;
  double progress = 0.0;     // progress_report
  Credits cost;              // progress_report
  bool starving = false;     // progress_report sent because funds ran out
  double speed = 0.0;        // advertise
  double interval = 0.0;     // spawn_child: seconds between refreshes
  std::vector<std::uint32_t> hosts;  // lookup_result

  double send_time = 0.0;
  double delivery_time = 0.0;
  std::uint64_t seq = 0;
};

struct NetworkConfig {
  double latency = 0.0;           // seconds
  double drop_probability = 0.0;
  std::uint64_t seed = 0;
};

/// In-process message queue with fixed latency and random loss. Delivery is
/// ordered by (time, sender, sequence) and FIFO per sender/recipient pair.
class Network {
 public:
  explicit Network(NetworkConfig config = {});

  /// Returns false when the message is lost.
  bool send(Message message, double now);
  /// Next message due at or before `now`, if any.
  std::optional<Message> pop_due(double now);

  std::size_t in_flight() const { return queue_.size(); }
  std::uint64_t sent() const { return sent_; }
  std::uint64_t dropped() const { return dropped_; }
  std::uint64_t delivered() const { return delivered_; }

 private:
  struct Order {
    bool operator()(const Message& a, const Message& b) const;
  };

  NetworkConfig config_;
  Rng rng_;
  std::set<Message, Order> queue_;
  std::map<std::pair<std::string, std::string>, double> last_delivery_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t sent_ = 0;
  std::uint64_t dropped_ = 0;
  std::uint64_t delivered_ = 0;
};

}  // namespace tycoon::harness
