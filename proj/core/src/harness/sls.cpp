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

#include "tycoon/harness/sls.hpp"

#include "tycoon/common/error.hpp"

namespace tycoon::harness {

void ServiceLocationService::advertise(HostId host, HostResources resources, double now,
                                       double ttl) {
  if (!(ttl > 0.0)) throw Error(Errc::invalid_argument, "ttl must be positive");
  entries_[host] = SLSEntry{host, resources, now + ttl};
}

std::vector<HostId> ServiceLocationService::lookup(double now, double min_speed) const {
  std::vector<HostId> out;
  for (const auto& [id, e] : entries_) {
    if (e.expiry > now && e.resources.cpu_speed >= min_speed) out.push_back(id);
  }
  return out;
}

}  // namespace tycoon::harness
