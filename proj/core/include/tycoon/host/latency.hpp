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

#include <span>

namespace tycoon::host {

struct RequestRecord {
  long arrival_slice = 0;
  double start_time = 0.0;       // seconds; first slice the web server serves it
  double completion_time = 0.0;  // seconds
  double latency = 0.0;          // start_time - arrival_slice * timeslice
};

/// Mean of the records' latencies in seconds. Throws Error(no_requests) when empty.
double measure_latency(std::span<const RequestRecord> records);

}  // namespace tycoon::host
