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
#include <string>
#include <utility>
#include <vector>

#include "tycoon/common/credits.hpp"

namespace tycoon::harness {

using AccountId = std::string;

/// Transfer-only ledger. Credits enter only through `issue`, so the sum of
/// balances always equals `total_issued`.
class Bank {
 public:
  /// Opens an empty account; no-op when it exists.
  void open(const AccountId& id);
  /// Mints `amount` into `id`, opening it if needed.
  void issue(const AccountId& id, Credits amount);
  /// Throws Error(not_found), Error(invalid_amount) or Error(insufficient_balance).
  void transfer(const AccountId& from, const AccountId& to, Credits amount);

  bool has(const AccountId& id) const { return accounts_.contains(id); }
  Credits balance(const AccountId& id) const;
  Credits total_issued() const { return issued_; }
  Credits total_balance() const;
  const std::map<AccountId, Credits>& accounts() const { return accounts_; }
  std::uint64_t transfers() const { return transfers_; }

 private:
  std::map<AccountId, Credits> accounts_;
  Credits issued_;
  std::uint64_t transfers_ = 0;
};

enum class FundingPolicyKind { open_loop, closed_loop };

const char* to_string(FundingPolicyKind kind);

struct FundingPolicy {
  FundingPolicyKind kind = FundingPolicyKind::open_loop;
  AccountId admin = "admin";
  std::vector<std::pair<AccountId, Credits>> incomes;  // per interval
  std::vector<AccountId> providers;                    // drained back to admin
};

/// One funding interval. Open loop pays every income from the admin account
/// (minting any shortfall) and drains providers back to it; closed loop does
/// nothing after the join-time allotments.
void apply_funding_policy(Bank& bank, const FundingPolicy& policy);

}  // namespace tycoon::harness
