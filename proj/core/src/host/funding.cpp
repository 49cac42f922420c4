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

#include "tycoon/host/funding.hpp"

#include "tycoon/common/error.hpp"
#include "tycoon/common/rng.hpp"

namespace tycoon::host {

std::vector<FundingEvent> gen_funding_events(double income_rate, double duration,
                                             std::uint64_t seed, double mean_interarrival) {
  if (!(income_rate > 0.0)) {
    throw Error(Errc::invalid_argument, "income_rate must be positive");
  }
  if (!(mean_interarrival > 0.0) || !(duration >= 0.0)) {
    throw Error(Errc::invalid_argument, "bad funding interval or duration");
  }
  std::vector<FundingEvent> events;
  Rng rng = make_rng(seed);
  double last = 0.0;
  for (;;) {
    const double t = last + exponential(rng, mean_interarrival);
    if (t >= duration) break;
    events.push_back({t, Credits::from_double(income_rate * (t - last))});
    last = t;
  }
  return events;
}

}  // namespace tycoon::host
