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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tycoon/sched/types.hpp"

namespace tycoon::sched {

/// Target share w_i / sum_j w_j. Throws Error(not_found) for an unknown id.
double ps_share(std::span<const PSProcess> processes, ProcessId id);

/// Minimum-virtual-time selection among `runnable` (ties to the lowest id).
/// The winner's virtual time advances by timeslice_length / weight.
std::optional<ProcessId> ps_select_winner(std::span<PSProcess> runnable,
                                          double timeslice_length);

/// Stateful proportional-share scheduler for one processor.
///
/// Virtual times are start tags measured against a global virtual clock that
/// advances by timeslice / (sum of runnable weights) per slice. A process that
/// goes to sleep keeps its lag relative to that clock and resumes with it, so
/// sleeping earns no credit and a weight-w process waits its turn behind the
/// others when it wakes.
class ProportionalShareScheduler {
 public:
  explicit ProportionalShareScheduler(double timeslice_length = 0.010);

  void add_process(ProcessId id, double weight, bool runnable = true);
  void set_runnable(ProcessId id, bool runnable);
  void set_weight(ProcessId id, double weight);

  /// Schedules one slice; nullopt when nothing is runnable.
  std::optional<ProcessId> run_slice();

  const PSProcess& process(ProcessId id) const;
  bool runnable(ProcessId id) const;
  double global_virtual_time() const { return global_vt_; }
  std::size_t size() const { return procs_.size(); }

 private:
  struct Slot {
    PSProcess proc;
    bool runnable = true;
    double lag = 0.0;  // virtual_time - global clock, saved while asleep
  };
  Slot& slot(ProcessId id);
  const Slot& slot(ProcessId id) const;

  double timeslice_;
  double global_vt_ = 0.0;
  std::vector<Slot> procs_;  // kept sorted by id
};

}  // namespace tycoon::sched
