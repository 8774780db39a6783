// Copyright 2026 The edgeguard Authors
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

#include <vector>

#include "edgeguard/chromatic.hpp"
#include "edgeguard/corpus.hpp"
#include "edgeguard/oracle.hpp"
#include "edgeguard/reductions.hpp"

namespace edgeguard {
namespace {

std::vector<PlaneGraph> sample(int n, int count) {
  std::vector<PlaneGraph> out;
  for (int s = 0; s < count; ++s) {
    out.push_back(random_plane(n, static_cast<unsigned>(s), 0.3, true));
  }
  return out;
}

template <typename Fn>
void over_sample(benchmark::State& state, Fn fn) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn(graphs[i++ % graphs.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_TwoFifths(benchmark::State& state) {
  over_sample(state, [](const PlaneGraph& g) { return guard_two_fifths(g).size(); });
}
BENCHMARK(BM_TwoFifths)->RangeMultiplier(2)->Range(16, 256);

void BM_ThreeEighths(benchmark::State& state) {
  over_sample(state, [](const PlaneGraph& g) { return guard_three_eighths(g).size(); });
}
BENCHMARK(BM_ThreeEighths)->RangeMultiplier(2)->Range(16, 256);

void BM_Chromatic(benchmark::State& state) {
  over_sample(state, [](const PlaneGraph& g) { return chromatic_guard(g).size(); });
}
BENCHMARK(BM_Chromatic)->RangeMultiplier(2)->Range(16, 256);

void BM_FourColor(benchmark::State& state) {
  const PlaneGraph g = random_triangulation(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(four_color(g).colors.data());
}
BENCHMARK(BM_FourColor)->RangeMultiplier(4)->Range(16, 1024);

void BM_ThreeHop(benchmark::State& state) {
  const PlaneGraph g = far_quads(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(three_hop_guard(g).size());
}
BENCHMARK(BM_ThreeHop)->Arg(40)->Arg(80)->Arg(160);

void BM_Oracle(benchmark::State& state) {
  std::vector<PlaneGraph> graphs;
  for (unsigned s = 0; graphs.size() < 4; ++s) {
    PlaneGraph g = random_plane(static_cast<int>(state.range(0)), s, 0.35, true);
    if (g.edge_count() <= 40) graphs.push_back(std::move(g));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimum_guard_set(graphs[i++ % graphs.size()]).size());
  }
}
BENCHMARK(BM_Oracle)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_GuardColoringSearch(benchmark::State& state) {
  const PlaneGraph g = random_triangulation(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_guard_coloring(g).has_value());
}
BENCHMARK(BM_GuardColoringSearch)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace edgeguard

BENCHMARK_MAIN();
