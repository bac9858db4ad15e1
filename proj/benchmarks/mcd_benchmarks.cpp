// Copyright 2026 The mcd-forge Authors
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

#include "mcd/construct.hpp"
#include "mcd/linalg.hpp"
#include "mcd/verify.hpp"

namespace {

using namespace mcd;

void BM_FieldCreate(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Field::create(s));
}
BENCHMARK(BM_FieldCreate)->Arg(3)->Arg(9)->Arg(32);

GFMatrix all_normalized_columns(const Field& f, int u) {
  std::vector<GFVector> cols;
  for (const auto& v : enumerate_tuples(f, u))
    if (!v.is_zero() && normalized(f, v) == v) cols.push_back(v);
  return GFMatrix::from_columns(cols);
}

void BM_GenerateLinearArray(benchmark::State& state) {
  const Field f = Field::create(3);
  const GFMatrix gen = all_normalized_columns(f, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generate_linear_array(f, gen));
}
BENCHMARK(BM_GenerateLinearArray)->Arg(3)->Arg(4)->Arg(5);

void BM_CheckStrengthTwo(benchmark::State& state) {
  const Field f = Field::create(3);
  const IntMatrix a =
      generate_linear_array(f, all_normalized_columns(f, static_cast<int>(state.range(0))));
  const std::vector<int> levels(a.cols(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_oa_strength(a, levels, 2));
}
BENCHMARK(BM_CheckStrengthTwo)->Arg(3)->Arg(4);

void BM_Theorem2(benchmark::State& state) {
  ConstructionParams p;
  p.method = Method::kTheorem2;
  p.s = 3;
  p.u = 5;
  p.u1 = static_cast<int>(state.range(0));
  p.v = 2;
  p.seed = Seed::value(1);
  for (auto _ : state) benchmark::DoNotOptimize(theorem2(p));
}
BENCHMARK(BM_Theorem2)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
