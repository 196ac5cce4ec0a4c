/*
 * Copyright 2026 The cispectra Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "cispectra/reference.hpp"
#include "cispectra/spectral.hpp"

namespace {

using namespace cispectra;

void BM_CiOrderLinear(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::uint32_t>(state.range(1));
  std::vector<std::uint32_t> table(table_size(p, n));
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::uint32_t s = 0;
    for (auto d : digits_of(k, p, n)) s += d;
    table[k] = s % p;
  }
  const PFunction f(p, n, std::move(table));
  for (auto _ : state) benchmark::DoNotOptimize(ci_order(f));
}
BENCHMARK(BM_CiOrderLinear)->Args({2, 8})->Args({3, 5})->Args({3, 6})->Args({5, 3});

void BM_IsCiRandom(benchmark::State& state) {
  const auto f = random_function(3, static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_ci(f, 1));
}
BENCHMARK(BM_IsCiRandom)->DenseRange(3, 7);

void BM_DftFloat(benchmark::State& state) {
  const auto f = random_function(static_cast<std::uint32_t>(state.range(0)),
                                 static_cast<std::uint32_t>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dft_float(f));
  state.SetComplexityN(static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_DftFloat)->Args({3, 7})->Args({3, 8})->Args({3, 10})->Args({2, 12})->Args({2, 16});

void BM_Autocorrelation(benchmark::State& state) {
  const auto f = random_function(3, static_cast<std::uint32_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(autocorrelation(f));
}
BENCHMARK(BM_Autocorrelation)->Arg(6)->Arg(9);

void BM_Consensus(benchmark::State& state) {
  const auto f = random_function(3, 4, 4);
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(consensus(f, m));
}
BENCHMARK(BM_Consensus)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
