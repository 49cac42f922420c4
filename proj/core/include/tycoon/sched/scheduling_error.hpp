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

#include <map>

#include "tycoon/sched/types.hpp"

namespace tycoon::sched {

using ShareMap = std::map<ProcessId, double>;

/// Sum over processes of |actual - intended| / intended.
///
/// Both maps must hold the same ids (Error(invalid_argument) otherwise); an
/// intended share of zero or less makes the relative error undefined
/// (Error(undefined_error)).
double scheduling_error(const ShareMap& actual, const ShareMap& intended);

}  // namespace tycoon::sched
