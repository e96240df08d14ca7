/*
   Copyright 2026 The grothmob Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "grothmob/divided_difference.hpp"
#include "grothmob/schubert.hpp"
#include "grothmob/theorem.hpp"
#include "grothmob/vector_poset.hpp"

using namespace grothmob;

static void BM_BuildTable(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto flavor = state.range(1) ? Flavor::grothendieck : Flavor::schubert;
    for (auto _ : state)
        benchmark::DoNotOptimize(build_table(n, flavor));
}

BENCHMARK(BM_BuildTable)->ArgsProduct({{4, 5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_DividedDifference(benchmark::State& state)
{
    const SparsePoly f = staircase(7);
    for (auto _ : state) {
        SparsePoly g = f;
        for (std::size_t i = 1; i < 7; ++i)
            g = isobaric_divided_difference(g, i);
        benchmark::DoNotOptimize(g);
    }
}

BENCHMARK(BM_DividedDifference);

// P' for 143562 with ceiling (d,...,d): the grid has (d+1)^5 points.
static void BM_EnlargedLabelling(benchmark::State& state)
{
    const auto d = static_cast<ExponentVector::value_type>(state.range(0));
    const auto w = Permutation::parse("143562");
    const SparsePoly s = schubert_poly(w).padded(5);
    const VectorPoset p = build_poset(support(s), ExponentVector{d, d, d, d, d});
    for (auto _ : state)
        benchmark::DoNotOptimize(one_sum_labelling(p));
    state.counters["elements"] = static_cast<double>(p.size());
}

BENCHMARK(BM_EnlargedLabelling)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_GrothendieckViaMobius(benchmark::State& state)
{
    const auto w = Permutation::parse("351624");
    const SparsePoly s = schubert_poly(w);
    for (auto _ : state)
        benchmark::DoNotOptimize(grothendieck_via_mobius(w, s));
}

BENCHMARK(BM_GrothendieckViaMobius);

static void BM_VerifyTheorem(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem(n));
}

BENCHMARK(BM_VerifyTheorem)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
