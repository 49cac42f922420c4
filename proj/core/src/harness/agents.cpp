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

#include "tycoon/harness/agents.hpp"

#include <algorithm>
#include <limits>

#include "tycoon/common/error.hpp"

namespace tycoon::harness {

double parent_budget(const ParentAgentSpec& spec) {
  if (spec.num_hosts <= 0 || !(spec.deadline_minutes > 0.0)) {
    throw Error(Errc::invalid_config, "parent spec needs hosts and a deadline");
  }
  return spec.total_credits.to_double() / (spec.num_hosts * spec.deadline_minutes);
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<ReplacementAction> parent_monitor_and_replace(
    std::span<const ChildAgentState> children, double theta,
    std::span<const HostId> candidates, Rng& rng) {
  std::vector<ReplacementAction> actions;
  if (!(theta > 0.0)) return actions;

  std::vector<HostId> free;
  for (HostId h : candidates) {
    const bool used = std::any_of(children.begin(), children.end(),
                                  [h](const ChildAgentState& c) { return c.host == h; });
    if (!used) free.push_back(h);
  }

  for (std::size_t i = 0; i < children.size(); ++i) {
    const ChildAgentState& c = children[i];
    bool replace = !c.responsive;
    if (!replace && !c.cost.is_zero()) {
      std::vector<double> sibling;
      for (std::size_t j = 0; j < children.size(); ++j) {
        if (j == i || children[j].cost.is_zero() || !children[j].responsive) continue;
        sibling.push_back(children[j].progress / children[j].cost.to_double());
      }
      if (!sibling.empty()) {
        replace = c.progress / c.cost.to_double() < theta * median(sibling);
      }
    }
    if (!replace || free.empty()) continue;
    const std::size_t pick = static_cast<std::size_t>(rng() % free.size());
    actions.push_back({c.host, free[pick]});
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return actions;
}

FundStatus child_fund_auctioneer(ChildAgentState& child, Bank& bank, const AccountId& parent,
                                 const AccountId& escrow, sched::Auctioneer& auctioneer,
                                 sched::AgentId agent, Credits lump) {
  if (lump.is_zero() || bank.balance(parent) < lump) return FundStatus::starving;
  bank.open(escrow);
  bank.transfer(parent, escrow, lump);
  auctioneer.fund(agent, lump);
  child.held += lump;
  return FundStatus::funded;
}

}  // namespace tycoon::harness
