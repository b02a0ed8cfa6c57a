// Throughput probes for the hot paths: segment classification, primality,
// censuses and the even-number scan. Build-only target, not part of ctest.

#include <benchmark/benchmark.h>

#include "hlattice/goldbach2.hpp"
#include "hlattice/goldbach3.hpp"
#include "hlattice/intervals.hpp"
#include "hlattice/sieve.hpp"
#include "hlattice/twins.hpp"

namespace {

using namespace hlattice;

void BM_classify_segment(benchmark::State& state) {
    const std::int64_t len = state.range(0);
    const std::int64_t lo = 1000000;
    for (auto _ : state) {
        auto seg = sieve::classify_segment(Branch::plus, lo, lo + len);
        benchmark::DoNotOptimize(seg.classes.data());
    }
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_classify_segment)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_is_prime_sieve_range(benchmark::State& state) {
    std::uint64_t n = 1000003;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sieve::is_prime(n));
        n += 2;
        if (n > 2000000) n = 1000003;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_is_prime_sieve_range);

void BM_is_prime_witness_range(benchmark::State& state) {
    std::uint64_t n = 1000000000039ULL;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sieve::is_prime(n));
        n += 2;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_is_prime_witness_range);

void BM_pair_census(benchmark::State& state) {
    const std::int64_t e = state.range(0);
    for (auto _ : state) {
        auto c = goldbach2::census(e, goldbach2::compatible_quadrants(e).front());
        benchmark::DoNotOptimize(c.n_pp);
    }
}
BENCHMARK(BM_pair_census)->Arg(1208)->Arg(100000)->Arg(1000000);

void BM_goldbach_solutions(benchmark::State& state) {
    for (auto _ : state) {
        auto sol = goldbach2::goldbach_solutions(state.range(0));
        benchmark::DoNotOptimize(sol.pairs.data());
    }
}
BENCHMARK(BM_goldbach_solutions)->Arg(1208)->Arg(100000);

void BM_scan_goldbach(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = goldbach2::scan_goldbach(10, state.range(0), 1);
        benchmark::DoNotOptimize(rep.counts.data());
    }
    state.SetItemsProcessed(state.iterations() * ((state.range(0) - 10) / 2 + 1));
}
BENCHMARK(BM_scan_goldbach)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_twin_pairs(benchmark::State& state) {
    for (auto _ : state) {
        auto t = twins::twin_pairs(state.range(0));
        benchmark::DoNotOptimize(t.data());
    }
}
BENCHMARK(BM_twin_pairs)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_interval_table(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = intervals::interval_table(state.range(0));
        benchmark::DoNotOptimize(rows.data());
    }
}
BENCHMARK(BM_interval_table)->Arg(109)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_scan_3gh(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = goldbach3::scan_3gh(15, state.range(0), 1);
        benchmark::DoNotOptimize(rep.unordered.data());
    }
}
BENCHMARK(BM_scan_3gh)->Arg(10001)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
