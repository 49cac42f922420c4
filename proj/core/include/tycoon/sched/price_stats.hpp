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
#include <deque>

namespace tycoon::sched {

/// Sliding window of recent clearing prices with its sample mean and
/// sample standard deviation (zero below two samples).
class PriceStats {
 public:
  explicit PriceStats(std::size_t window = 1000);

  void push(double clearing_price);

  double mean() const { return mean_; }
  double stddev() const { return stddev_; }
  std::size_t size() const { return window_.size(); }
  bool empty() const { return window_.empty(); }
  std::size_t capacity() const { return capacity_; }
  const std::deque<double>& window() const { return window_; }

 private:
  void recompute();

  std::size_t capacity_;
  std::deque<double> window_;
  double mean_ = 0.0;
  double stddev_ = 0.0;
};

}  // namespace tycoon::sched
