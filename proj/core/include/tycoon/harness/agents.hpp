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
#include <optional>
#include <span>
#include <vector>

#include "tycoon/common/credits.hpp"
#include "tycoon/common/rng.hpp"
#include "tycoon/harness/bank.hpp"
#include "tycoon/harness/sls.hpp"
#include "tycoon/sched/auctioneer.hpp"

namespace tycoon::harness {

struct ParentAgentSpec {
  Credits total_credits;
  double deadline_minutes = 60.0;
  int num_hosts = 1;
  double theta = 0.5;  // replacement threshold relative to the sibling median
};

/// total_credits / (num_hosts * deadline_minutes). Throws Error(invalid_config).
double parent_budget(const ParentAgentSpec& spec);

struct ChildAgentState {
  HostId host = 0;
  Credits held;             // funds handed to the auctioneer so far
  double progress = 0.0;    // work units completed
  Credits cost;             // credits charged by the auctioneer
  bool responsive = true;   // answered the last progress query
};

struct ReplacementAction {
  HostId kill_host = 0;
  HostId spawn_host = 0;
};

/// Replaces every child whose progress/cost ratio is below theta times the
/// median ratio of its siblings, or which stopped answering, with a child on
/// a uniformly random unused candidate. A child with no cost yet cannot be
/// judged and is left out of the medians. theta = 0 disables replacement.
std::vector<ReplacementAction> parent_monitor_and_replace(
    std::span<const ChildAgentState> children, double theta,
    std::span<const HostId> candidates, Rng& rng);

enum class FundStatus { funded, starving };

/// Moves a lump from the parent's account into the host escrow and credits
/// the child's auctioneer account by the same amount.
FundStatus child_fund_auctioneer(ChildAgentState& child, Bank& bank, const AccountId& parent,
                                 const AccountId& escrow, sched::Auctioneer& auctioneer,
                                 sched::AgentId agent, Credits lump);

}  // namespace tycoon::harness
