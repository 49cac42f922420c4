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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tycoon/sched/types.hpp"

namespace tycoon::sched {

/// Indexed binary max-heap of bids keyed by agent.
///
/// Ordering is by bid, then by lower agent id. The top is available in O(1),
/// the runner-up is one of the root's children, and a single key update or
/// removal costs O(log n). Every key comparison is counted so tests and
/// benchmarks can check the per-slice work.
class BidHeap {
 public:
  struct Entry {
    AgentId agent;
    double bid;
  };

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(AgentId agent) const;

  void push(AgentId agent, double bid);
  void update(AgentId agent, double bid);
  void erase(AgentId agent);

  const Entry& top() const { return heap_.front(); }
  /// Best entry other than the top.
  std::optional<Entry> runner_up() const;
  /// Best entry other than `excluded`; looks at most two levels deep.
  std::optional<Entry> best_excluding(AgentId excluded) const;

  std::uint64_t comparisons() const { return comparisons_; }
  void reset_comparisons() { comparisons_ = 0; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  bool higher(std::size_t a, std::size_t b) const;
  void sift_up(std::size_t i);
  void sift_down(std::size_t i);
  void swap_nodes(std::size_t a, std::size_t b);
  std::size_t& slot(AgentId agent);

  std::vector<Entry> heap_;
  std::vector<std::size_t> position_;  // agent id -> heap index
  mutable std::uint64_t comparisons_ = 0;
};

inline bool BidHeap::contains(AgentId agent) const {
  return agent < position_.size() && position_[agent] != kAbsent;
}

inline std::size_t& BidHeap::slot(AgentId agent) {
  if (agent >= position_.size()) position_.resize(agent + 1, kAbsent);
  return position_[agent];
}

inline bool BidHeap::higher(std::size_t a, std::size_t b) const {
  ++comparisons_;
  const Entry& x = heap_[a];
  const Entry& y = heap_[b];
  if (x.bid != y.bid) return x.bid > y.bid;
  return x.agent < y.agent;
}

inline void BidHeap::swap_nodes(std::size_t a, std::size_t b) {
  std::swap(heap_[a], heap_[b]);
  position_[heap_[a].agent] = a;
  position_[heap_[b].agent] = b;
}

inline void BidHeap::sift_up(std::size_t i) {
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!higher(i, parent)) break;
    swap_nodes(i, parent);
    i = parent;
  }
}

inline void BidHeap::sift_down(std::size_t i) {
  const std::size_t n = heap_.size();
  for (;;) {
    const std::size_t l = 2 * i + 1;
    const std::size_t r = l + 1;
    std::size_t best = i;
    if (l < n && higher(l, best)) best = l;
    if (r < n && higher(r, best)) best = r;
    if (best == i) return;
    swap_nodes(i, best);
    i = best;
  }
}

inline void BidHeap::push(AgentId agent, double bid) {
  std::size_t& pos = slot(agent);
  if (pos != kAbsent) {
    update(agent, bid);
    return;
  }
  heap_.push_back({agent, bid});
  pos = heap_.size() - 1;
  sift_up(pos);
}

inline void BidHeap::update(AgentId agent, double bid) {
  const std::size_t i = position_.at(agent);
  const double old = heap_[i].bid;
  heap_[i].bid = bid;
  if (bid > old) {
    sift_up(i);
  } else if (bid < old) {
    sift_down(i);
  }
}

inline void BidHeap::erase(AgentId agent) {
  if (!contains(agent)) return;
  const std::size_t i = position_[agent];
  const std::size_t last = heap_.size() - 1;
  if (i != last) swap_nodes(i, last);
  heap_.pop_back();
  position_[agent] = kAbsent;
  if (i < heap_.size()) {
    const AgentId moved = heap_[i].agent;
    sift_up(i);
    sift_down(position_[moved]);
  }
}

inline std::optional<BidHeap::Entry> BidHeap::runner_up() const {
  const std::size_t n = heap_.size();
  if (n < 2) return std::nullopt;
  if (n == 2) return heap_[1];
  return higher(1, 2) ? heap_[1] : heap_[2];
}

inline std::optional<BidHeap::Entry> BidHeap::best_excluding(AgentId excluded) const {
  if (heap_.empty()) return std::nullopt;
  if (heap_[0].agent != excluded) return heap_[0];
  return runner_up();
}

}  // namespace tycoon::sched
