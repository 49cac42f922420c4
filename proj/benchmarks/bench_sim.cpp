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

#include <benchmark/benchmark.h>

#include "tycoon/host/host_sim.hpp"
#include "tycoon/market/market_sim.hpp"

namespace {

using namespace tycoon;

void BM_HostSim(benchmark::State& state) {
  host::HostSimConfig cfg;
  cfg.scheduler = state.range(0) == 0 ? host::SchedulerKind::proportional_share
                                      : host::SchedulerKind::auction_share;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(host::run_host_sim(cfg));
  }
  state.SetLabel(host::to_string(cfg.scheduler));
}
BENCHMARK(BM_HostSim)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_MarketSim(benchmark::State& state) {
  market::MarketConfig cfg;
  cfg.mean_task_interarrival = static_cast<double>(state.range(0));
  cfg.behavior = market::Behavior::strategic_market;
  for (auto _ : state) benchmark::DoNotOptimize(market::run_market_sim(cfg));
}
BENCHMARK(BM_MarketSim)->Arg(140)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive is built with a different LTO version.
BENCHMARK_MAIN();
