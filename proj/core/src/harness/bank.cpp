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

#include "tycoon/harness/bank.hpp"

#include "tycoon/common/error.hpp"

namespace tycoon::harness {

void Bank::open(const AccountId& id) { accounts_.try_emplace(id); }

void Bank::issue(const AccountId& id, Credits amount) {
  if (amount.is_negative()) throw Error(Errc::invalid_amount, "cannot issue a negative amount");
  accounts_[id] += amount;
  issued_ += amount;
}

void Bank::transfer(const AccountId& from, const AccountId& to, Credits amount) {
  if (amount.is_negative()) throw Error(Errc::invalid_amount, "negative transfer");
  auto src = accounts_.find(from);
  auto dst = accounts_.find(to);
  if (src == accounts_.end()) throw Error(Errc::not_found, "unknown account " + from);
  if (dst == accounts_.end()) throw Error(Errc::not_found, "unknown account " + to);
  if (src->second < amount) {
    throw Error(Errc::insufficient_balance, "account " + from + " cannot cover the transfer");
  }
  src->second -= amount;
  dst->second += amount;
  ++transfers_;
}

Credits Bank::balance(const AccountId& id) const {
  auto it = accounts_.find(id);
  if (it == accounts_.end()) throw Error(Errc::not_found, "unknown account " + id);
  return it->second;
}

Credits Bank::total_balance() const {
  Credits total;
  for (const auto& [id, c] : accounts_) total += c;
  return total;
}

const char* to_string(FundingPolicyKind kind) {
  return kind == FundingPolicyKind::open_loop ? "open_loop" : "closed_loop";
}

void apply_funding_policy(Bank& bank, const FundingPolicy& policy) {
  if (policy.kind == FundingPolicyKind::closed_loop) return;
  bank.open(policy.admin);
  for (const auto& [user, amount] : policy.incomes) {
    const Credits have = bank.balance(policy.admin);
    if (have < amount) bank.issue(policy.admin, amount - have);
    bank.open(user);
    bank.transfer(policy.admin, user, amount);
  }
  // Providers return everything they earned (the schedule is unspecified).
  for (const AccountId& p : policy.providers) {
    if (!bank.has(p)) continue;
    bank.transfer(p, policy.admin, bank.balance(p));
  }
}

}  // namespace tycoon::harness
