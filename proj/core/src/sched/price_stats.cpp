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

#include "tycoon/sched/price_stats.hpp"

#include <cmath>

namespace tycoon::sched {

PriceStats::PriceStats(std::size_t window) : capacity_(window == 0 ? 1 : window) {}

void PriceStats::push(double clearing_price) {
  window_.push_back(clearing_price);
  while (window_.size() > capacity_) window_.pop_front();
  recompute();
}

// Full two-pass recomputation keeps mean/stddev equal to the window contents
// without drift; the window is small next to the work of a slice.
void PriceStats::recompute() {
  const std::size_t n = window_.size();
  if (n == 0) {
    mean_ = stddev_ = 0.0;
    return;
  }
  double sum = 0.0;
  for (double p : window_) sum += p;
  mean_ = sum / static_cast<double>(n);
  if (n < 2) {
    stddev_ = 0.0;
    return;
  }
  double ss = 0.0;
  for (double p : window_) ss += (p - mean_) * (p - mean_);
  stddev_ = std::sqrt(ss / static_cast<double>(n - 1));
}

}  // namespace tycoon::sched
