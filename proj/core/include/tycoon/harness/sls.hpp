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
#include <vector>

namespace tycoon::harness {

using HostId = std::uint32_t;

struct HostResources {
  double cpu_speed = 1.0;  // work units per second
};

struct SLSEntry {
  HostId host = 0;
  HostResources resources;
  double expiry = 0.0;
};

/// Soft-state registry: entries vanish once their TTL runs out unless renewed.
class ServiceLocationService {
 public:
  /// Throws Error(invalid_argument) when ttl <= 0.
  void advertise(HostId host, HostResources resources, double now, double ttl);
  /// Unexpired hosts with at least `min_speed`, in id order.
  std::vector<HostId> lookup(double now, double min_speed = 0.0) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<HostId, SLSEntry> entries_;
};

}  // namespace tycoon::harness
