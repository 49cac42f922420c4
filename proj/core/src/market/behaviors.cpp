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

#include <algorithm>
#include <cmath>

#include "tycoon/common/error.hpp"
#include "tycoon/market/market_sim.hpp"

namespace tycoon::market {

const char* to_string(Behavior behavior) {
  switch (behavior) {
    case Behavior::obedient: return "obedient";
    case Behavior::strategic_no_market: return "strategic_no_market";
    case Behavior::strategic_market: return "strategic_market";
  }
  return "unknown";
}

std::optional<Behavior> parse_behavior(std::string_view name) {
  for (Behavior b : {Behavior::obedient, Behavior::strategic_no_market,
                     Behavior::strategic_market}) {
    if (name == to_string(b)) return b;
  }
  return std::nullopt;
}

double obedient_weight(const Task& task) { return task.value; }

double strategic_nomarket_weight(double max_weight) { return max_weight; }

std::optional<double> market_budget_weight(double balance, double value, int num_hosts,
                                           double deadline, double now) {
  if (num_hosts < 1) throw Error(Errc::invalid_argument, "num_hosts must be positive");
  if (!(deadline > now)) return std::nullopt;
  if (!(balance > 0.0)) return 0.0;
  const double hosts = static_cast<double>(num_hosts);
  const double w = balance * value / (hosts * (deadline - now));
  return std::min(w, balance / hosts);
}

double accrue_utility(const Task& task, double completion_time) {
  if (!task.finished) return 0.0;
  return completion_time <= task.deadline ? task.value * task.size : 0.0;
}

}  // namespace tycoon::market
