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

#include <stdexcept>
#include <string>

namespace tycoon {

enum class Errc {
  invalid_account,
  invalid_elapsed,
  invalid_amount,
  invalid_argument,
  capacity_rejected,
  insufficient_history,
  insufficient_balance,
  not_found,
  undefined_error,
  no_requests,
  expired_task,
  invalid_config,
  io_error,
};

/// Failure of a precondition or a rejected request.
///
/// Idle slices and empty lookups are not errors; those come back as empty
/// optionals or containers.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_account: return "invalid-account";
    case Errc::invalid_elapsed: return "invalid-elapsed";
    case Errc::invalid_amount: return "invalid-amount";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::capacity_rejected: return "capacity-rejected";
    case Errc::insufficient_history: return "insufficient-history";
    case Errc::insufficient_balance: return "insufficient-balance";
    case Errc::not_found: return "not-found";
    case Errc::undefined_error: return "undefined-error";
    case Errc::no_requests: return "no-requests";
    case Errc::expired_task: return "expired-task";
    case Errc::invalid_config: return "invalid-config";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace tycoon
