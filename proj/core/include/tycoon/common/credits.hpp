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

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>

namespace tycoon {

/// Amount of currency, stored as a whole number of nano-credits.
///
/// Integer storage keeps every ledger sum exact, so conservation checks
/// compare with `==` instead of a tolerance.
class Credits {
 public:
  static constexpr std::int64_t kUnitsPerCredit = 1'000'000'000;

  constexpr Credits() = default;

  static constexpr Credits from_units(std::int64_t units) {
    Credits c;
    c.units_ = units;
    return c;
  }

  /// Rounds to the nearest nano-credit.
  static Credits from_double(double credits) {
    return from_units(std::llround(credits * static_cast<double>(kUnitsPerCredit)));
  }

  constexpr std::int64_t units() const { return units_; }
  constexpr double to_double() const {
    return static_cast<double>(units_) / static_cast<double>(kUnitsPerCredit);
  }

  constexpr Credits& operator+=(Credits o) {
    units_ += o.units_;
    return *this;
  }
  constexpr Credits& operator-=(Credits o) {
    units_ -= o.units_;
    return *this;
  }
  friend constexpr Credits operator+(Credits a, Credits b) { return a += b; }
  friend constexpr Credits operator-(Credits a, Credits b) { return a -= b; }
  friend constexpr auto operator<=>(Credits, Credits) = default;

  constexpr bool is_zero() const { return units_ == 0; }
  constexpr bool is_negative() const { return units_ < 0; }

 private:
  std::int64_t units_ = 0;
};

inline constexpr Credits min(Credits a, Credits b) { return a < b ? a : b; }

}  // namespace tycoon
