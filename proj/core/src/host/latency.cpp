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

#include "tycoon/host/latency.hpp"

#include "tycoon/common/error.hpp"

namespace tycoon::host {

double measure_latency(std::span<const RequestRecord> records) {
  if (records.empty()) throw Error(Errc::no_requests, "no completed requests");
  double sum = 0.0;
  for (const RequestRecord& r : records) sum += r.latency;
  return sum / static_cast<double>(records.size());
}

}  // namespace tycoon::host
