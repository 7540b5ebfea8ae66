// Copyright 2026 The dlorder Authors
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

// Serial against OpenMP-parallel saturation.

#include <benchmark/benchmark.h>

#include <random>

#include "dlorder/engine.hpp"
#include "support/random_programs.hpp"

namespace {

using dlorder::Program;

const Program& discrrun() {
  static const Program p = dlorder::parse(dlorder::testing::discrrun_text());
  return p;
}

// A fixed batch of wider random programs.
const std::vector<Program>& random_batch() {
  static const std::vector<Program> batch = [] {
    std::mt19937_64 rng(7);
    dlorder::testing::GenParams g;
    g.max_rules = 5;
    g.max_order_atoms = 4;
    std::vector<Program> out;
    for (int i = 0; i < 200; ++i) out.push_back(dlorder::testing::random_program(rng, g));
    return out;
  }();
  return batch;
}

void BM_Discrrun(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = dlorder::saturate(discrrun(), {.parallel = parallel});
    benchmark::DoNotOptimize(r.types.size());
  }
  state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_Discrrun)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DiscrrunDense(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = dlorder::saturate(discrrun(), {.dense = true, .parallel = parallel});
    benchmark::DoNotOptimize(r.types.size());
  }
  state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_DiscrrunDense)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RandomBatch(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    std::size_t n = 0;
    for (const Program& p : random_batch()) n += dlorder::saturate(p, {.parallel = parallel}).types.size();
    benchmark::DoNotOptimize(n);
  }
  state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_RandomBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
