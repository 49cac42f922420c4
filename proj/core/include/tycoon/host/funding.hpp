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
#include <vector>

#include "tycoon/common/credits.hpp"

namespace tycoon::host {

struct FundingEvent {
  double time = 0.0;  // seconds
  Credits amount;
};

/// Poisson funding stream: each event deposits `income_rate` times the
/// interval since the previous event, so long-run income equals the rate.
/// Only events strictly before `duration` are returned.
std::vector<FundingEvent> gen_funding_events(double income_rate, double duration,
                                             std::uint64_t seed,
                                             double mean_interarrival = 1.0);

}  // namespace tycoon::host
