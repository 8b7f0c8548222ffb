/*
 * Copyright 2026 The mrbwt Authors
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

// Serial reference vs. the engine-backed constructions, at one worker and at
// the machine's thread count.

#include "mrbwt/bwt.hpp"
#include "mrbwt/corpus.hpp"
#include "mrbwt/oracle.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>
#include <map>
#include <random>

namespace
{

using namespace mrbwt;

const Text& dna(std::size_t bytes)
{
    static std::map<std::size_t, Text> cache;
    auto it = cache.find(bytes);
    if (it == cache.end())
        it = cache.emplace(bytes, Text(corpus::dna_like(bytes, 17))).first;
    return it->second;
}

std::size_t max_workers()
{
    return static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
}

PipelineConfig config_for(std::size_t workers)
{
    PipelineConfig c;
    c.engine = {workers, workers, std::max<std::size_t>(1024, 100 * workers), 1};
    c.smr.r = workers;
    return c;
}

void BM_NaiveSa(benchmark::State& state)
{
    const auto& t = dna(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::naive_sa(t));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}

template <Algorithm A>
void BM_Construction(benchmark::State& state)
{
    const auto& t = dna(static_cast<std::size_t>(state.range(0)));
    const auto workers = state.range(1) == 0 ? max_workers() : static_cast<std::size_t>(state.range(1));
    const auto config = config_for(workers);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_suffix_array(t, A, config));
    state.SetBytesProcessed(state.iterations() * state.range(0));
    state.counters["workers"] = static_cast<double>(workers);
}

void BM_RangePartition(benchmark::State& state)
{
    const auto workers = state.range(1) == 0 ? max_workers() : static_cast<std::size_t>(state.range(1));
    std::mt19937_64 rng(3);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> records(static_cast<std::size_t>(state.range(0)));
    for (auto& [k, v] : records)
        k = rng(), v = rng();
    const engine::Engine eng(config_for(workers).engine);
    const auto ds = eng.parallelize(records);
    for (auto _ : state)
        benchmark::DoNotOptimize(eng.range_partition_and_sort(ds, workers));
    state.counters["workers"] = static_cast<double>(workers);
}

// Second argument: worker count, 0 = all threads.
void sizes(benchmark::internal::Benchmark* b)
{
    for (long bytes : {1L << 16, 1L << 20})
        for (long workers : {1L, 0L})
            b->Args({bytes, workers});
}

} // namespace

BENCHMARK(BM_NaiveSa)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Construction<Algorithm::Pda>)->Name("BM_Pda")->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Construction<Algorithm::SmrRadix>)->Name("BM_SmrRadix")->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Construction<Algorithm::SmrTimsort>)->Name("BM_SmrStable")->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RangePartition)->Args({1 << 20, 1})->Args({1 << 20, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
