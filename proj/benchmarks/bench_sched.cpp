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

#include "tycoon/common/rng.hpp"
#include "tycoon/sched/auctioneer.hpp"
#include "tycoon/sched/proportional_share.hpp"

namespace {

using namespace tycoon;

sched::Auctioneer make_auctioneer(int n) {
  sched::SchedulerConfig cfg;
  cfg.price_mode = sched::PriceMode::second_price;
  sched::Auctioneer a(cfg);
  Rng rng = make_rng(7);
  for (int i = 0; i < n; ++i) {
    sched::AgentAccount acct;
    acct.id = static_cast<sched::AgentId>(i);
    acct.balance = Credits::from_double(100.0 + 900.0 * uniform01(rng));
    acct.requested_cpu = 100.0;
    a.add_agent(acct);
  }
  return a;
}

// One auction round: winner lookup, charge and the winner's key update.
void BM_AuctioneerSlice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sched::Auctioneer a = make_auctioneer(n);
  Rng rng = make_rng(11);
  a.reset_comparisons();
  std::int64_t slices = 0;
  for (auto _ : state) {
    auto out = a.run_slice();
    benchmark::DoNotOptimize(out);
    // Keep the market alive: refund the winner now and then.
    if (out.winner && (slices & 63) == 0) {
      a.fund(*out.winner, Credits::from_double(50.0 * uniform01(rng)));
    }
    ++slices;
  }
  state.counters["cmp/slice"] =
      benchmark::Counter(static_cast<double>(a.comparisons()) / static_cast<double>(slices));
  state.SetComplexityN(n);
}
BENCHMARK(BM_AuctioneerSlice)->RangeMultiplier(4)->Range(4, 4096)->Complexity(benchmark::oLogN);

void BM_ProportionalShareSlice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sched::ProportionalShareScheduler ps(0.010);
  for (int i = 0; i < n; ++i) ps.add_process(static_cast<sched::ProcessId>(i), 1.0 + i % 7);
  for (auto _ : state) benchmark::DoNotOptimize(ps.run_slice());
  state.SetComplexityN(n);
}
BENCHMARK(BM_ProportionalShareSlice)->RangeMultiplier(4)->Range(4, 4096)->Complexity(benchmark::oN);

void BM_BidHeapUpdate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sched::BidHeap heap;
  Rng rng = make_rng(3);
  for (int i = 0; i < n; ++i) heap.push(static_cast<sched::AgentId>(i), uniform01(rng));
  for (auto _ : state) {
    const auto id = static_cast<sched::AgentId>(rng() % static_cast<std::uint64_t>(n));
    heap.update(id, uniform01(rng));
    benchmark::DoNotOptimize(heap.top());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_BidHeapUpdate)->RangeMultiplier(4)->Range(4, 4096)->Complexity(benchmark::oLogN);

}  // namespace
