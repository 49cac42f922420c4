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

#include "tycoon/sched/scheduling_error.hpp"

#include <cmath>

#include "tycoon/common/error.hpp"

namespace tycoon::sched {

double scheduling_error(const ShareMap& actual, const ShareMap& intended) {
  if (actual.size() != intended.size()) {
    throw Error(Errc::invalid_argument, "share maps cover different processes");
  }
  double error = 0.0;
  for (const auto& [id, want] : intended) {
    const auto it = actual.find(id);
    if (it == actual.end()) {
      throw Error(Errc::invalid_argument, "share maps cover different processes");
    }
    if (!(want > 0.0)) {
      throw Error(Errc::undefined_error, "intended share must be positive");
    }
    error += std::abs(it->second - want) / want;
  }
  return error;
}

}  // namespace tycoon::sched
