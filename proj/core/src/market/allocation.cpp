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

#include <numeric>

#include "tycoon/common/error.hpp"
#include "tycoon/market/market_sim.hpp"

namespace tycoon::market {

namespace {
constexpr double kEps = 1e-12;
}

std::vector<double> allocate_host_step(std::span<const double> weights,
                                       std::span<const double> remaining, double capacity) {
  if (weights.size() != remaining.size()) {
    throw Error(Errc::invalid_argument, "weights and remaining differ in length");
  }
  const std::size_t n = weights.size();
  std::vector<double> give(n, 0.0);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] < 0.0) throw Error(Errc::invalid_argument, "negative weight");
    if (weights[i] > 0.0 && remaining[i] > kEps) open.push_back(i);
  }
  double cap = capacity;
  // Each round either exhausts capacity or finishes at least one task.
  while (cap > kEps && !open.empty()) {
    double total = 0.0;
    for (std::size_t i : open) total += weights[i];
    double used = 0.0;
    std::vector<std::size_t> next;
    for (std::size_t i : open) {
      const double want = remaining[i] - give[i];
      const double g = std::min(cap * weights[i] / total, want);
      give[i] += g;
      used += g;
      if (remaining[i] - give[i] > kEps) next.push_back(i);
    }
    cap -= used;
    open.swap(next);
  }
  return give;
}

}  // namespace tycoon::market
