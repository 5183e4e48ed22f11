// Copyright 2026 The tmcf Authors
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

#include "tmcf/analysis.hpp"
#include "tmcf/products3.hpp"
#include "tmcf/thuemorse.hpp"

namespace {

using namespace tmcf;

void BM_VTable(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(v_table(level));
  state.SetComplexityN(std::int64_t{2} << level);
}
BENCHMARK(BM_VTable)->DenseRange(6, 14, 2)->Complexity();

void BM_GcfEval(benchmark::State& state) {
  const GeneralizedCF g = build_tm_gcf(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gcf_eval(g));
}
BENCHMARK(BM_GcfEval)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_PolyCF(benchmark::State& state) {
  const RationalFunction g = expand_g(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poly_cf(g));
}
BENCHMARK(BM_PolyCF)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_RcfOfRational(benchmark::State& state) {
  const Rational x = eval_f_at(static_cast<unsigned>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rcf_of_rational(x));
}
BENCHMARK(BM_RcfOfRational)->DenseRange(8, 16, 2)->Unit(benchmark::kMicrosecond);

void BM_PartialQuotientStats(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partial_quotient_stats(10, level));
}
BENCHMARK(BM_PartialQuotientStats)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_AlphaBetaTable(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alphabeta_table(-1, -1, level));
}
BENCHMARK(BM_AlphaBetaTable)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
