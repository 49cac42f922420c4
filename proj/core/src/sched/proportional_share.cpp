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

#include "tycoon/sched/proportional_share.hpp"

#include <algorithm>
#include <string>

#include "tycoon/common/error.hpp"

namespace tycoon::sched {

namespace {

void check_weight(double weight) {
  if (!(weight > 0.0)) throw Error(Errc::invalid_argument, "weight must be positive");
}

}  // namespace

double ps_share(std::span<const PSProcess> processes, ProcessId id) {
  double total = 0.0;
  const PSProcess* self = nullptr;
  for (const PSProcess& p : processes) {
    total += p.weight;
    if (p.id == id) self = &p;
  }
  if (self == nullptr) {
    throw Error(Errc::not_found, "unknown process " + std::to_string(id));
  }
  return self->weight / total;
}

std::optional<ProcessId> ps_select_winner(std::span<PSProcess> runnable,
                                          double timeslice_length) {
  PSProcess* best = nullptr;
  for (PSProcess& p : runnable) {
    check_weight(p.weight);
    if (best == nullptr || p.virtual_time < best->virtual_time ||
        (p.virtual_time == best->virtual_time && p.id < best->id)) {
      best = &p;
    }
  }
  if (best == nullptr) return std::nullopt;
  best->virtual_time += timeslice_length / best->weight;
  return best->id;
}

ProportionalShareScheduler::ProportionalShareScheduler(double timeslice_length)
    : timeslice_(timeslice_length) {
  if (!(timeslice_length > 0.0)) {
    throw Error(Errc::invalid_config, "timeslice_length must be positive");
  }
}

ProportionalShareScheduler::Slot& ProportionalShareScheduler::slot(ProcessId id) {
  auto it = std::lower_bound(procs_.begin(), procs_.end(), id,
                             [](const Slot& s, ProcessId v) { return s.proc.id < v; });
  if (it == procs_.end() || it->proc.id != id) {
    throw Error(Errc::not_found, "unknown process " + std::to_string(id));
  }
  return *it;
}

const ProportionalShareScheduler::Slot& ProportionalShareScheduler::slot(ProcessId id) const {
  return const_cast<ProportionalShareScheduler*>(this)->slot(id);
}

void ProportionalShareScheduler::add_process(ProcessId id, double weight, bool runnable) {
  check_weight(weight);
  auto it = std::lower_bound(procs_.begin(), procs_.end(), id,
                             [](const Slot& s, ProcessId v) { return s.proc.id < v; });
  if (it != procs_.end() && it->proc.id == id) {
    throw Error(Errc::invalid_argument, "duplicate process " + std::to_string(id));
  }
  // Newcomers start at the global clock, so they get no credit for time before joining.
  procs_.insert(it, Slot{PSProcess{id, weight, global_vt_}, runnable, 0.0});
}

void ProportionalShareScheduler::set_runnable(ProcessId id, bool runnable) {
  Slot& s = slot(id);
  if (s.runnable == runnable) return;
  if (runnable) {
    s.proc.virtual_time = std::max(s.proc.virtual_time, global_vt_ + s.lag);
  } else {
    s.lag = s.proc.virtual_time - global_vt_;
  }
  s.runnable = runnable;
}

void ProportionalShareScheduler::set_weight(ProcessId id, double weight) {
  check_weight(weight);
  slot(id).proc.weight = weight;
}

std::optional<ProcessId> ProportionalShareScheduler::run_slice() {
  // Eligible processes have not run ahead of the global clock; among them the
  // earliest virtual finish wins. Plain min-virtual-time lets a light process
  // fall more than one slice behind its entitlement.
  constexpr double kEps = 1e-12;
  Slot* best = nullptr;
  Slot* earliest = nullptr;  // fallback when nobody is eligible
  double total = 0.0;
  for (Slot& s : procs_) {
    if (!s.runnable) continue;
    total += s.proc.weight;
    const double vt = s.proc.virtual_time;
    // procs_ is sorted by id, so strict < keeps the lowest id on ties.
    if (earliest == nullptr || vt < earliest->proc.virtual_time) earliest = &s;
    if (vt > global_vt_ + kEps) continue;
    const double finish = vt + timeslice_ / s.proc.weight;
    if (best == nullptr || finish < best->proc.virtual_time + timeslice_ / best->proc.weight) {
      best = &s;
    }
  }
  if (earliest == nullptr) return std::nullopt;
  if (best == nullptr) best = earliest;
  best->proc.virtual_time += timeslice_ / best->proc.weight;
  global_vt_ += timeslice_ / total;
  return best->proc.id;
}

const PSProcess& ProportionalShareScheduler::process(ProcessId id) const {
  return slot(id).proc;
}

bool ProportionalShareScheduler::runnable(ProcessId id) const { return slot(id).runnable; }

}  // namespace tycoon::sched
