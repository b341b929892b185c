// Microbenchmarks pitting the search kernels against their serial
// reference implementations, and the parallel kernels against themselves
// at different worker counts.

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mpr/arrow.hpp"
#include "mpr/canonical.hpp"
#include "mpr/enumerate.hpp"
#include "mpr/hom.hpp"
#include "mpr/ramsey.hpp"

using namespace mpr;

namespace {

void set_workers(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

Multiposet extended_antichain(int n) {
    Relation lin(n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            lin.set(a, b);
    return Multiposet(n, {Relation::diagonal(n), lin});
}

void BM_arrow_backtracking(benchmark::State& state) {
    set_workers(static_cast<int>(state.range(1)));
    Multiposet c = chain_structure(static_cast<int>(state.range(0)));
    Multiposet b = chain_structure(3);
    Multiposet a = chain_structure(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(arrow_check(c, b, a, 2).holds);
}
BENCHMARK(BM_arrow_backtracking)
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 4})
    ->Args({7, 1})
    ->Args({7, 4});

void BM_arrow_naive(benchmark::State& state) {
    Multiposet c = chain_structure(static_cast<int>(state.range(0)));
    Multiposet b = chain_structure(3);
    Multiposet a = chain_structure(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(ref::naive_arrow_check(c, b, a, 2).holds);
}
BENCHMARK(BM_arrow_naive)->Arg(5)->Arg(6);

void BM_embeddings_backtracking(benchmark::State& state) {
    set_workers(static_cast<int>(state.range(1)));
    Multiposet small = extended_antichain(3);
    Multiposet big = extended_antichain(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_embeddings(small, big).size());
}
BENCHMARK(BM_embeddings_backtracking)->Args({9, 1})->Args({9, 4})->Args({11, 1})->Args({11, 4});

void BM_embeddings_filter(benchmark::State& state) {
    Multiposet small = extended_antichain(3);
    Multiposet big = extended_antichain(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ref::embeddings_by_filter(small, big).size());
}
BENCHMARK(BM_embeddings_filter)->Arg(9)->Arg(11);

void BM_canonical_pruned(benchmark::State& state) {
    Multiposet x = extended_antichain(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(x).bytes.size());
}
BENCHMARK(BM_canonical_pruned)->Arg(6)->Arg(7)->Arg(8);

void BM_canonical_enumeration(benchmark::State& state) {
    Multiposet x = extended_antichain(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ref::canonical_form_by_enumeration(x).bytes.size());
}
BENCHMARK(BM_canonical_enumeration)->Arg(6)->Arg(7)->Arg(8);

void BM_enumerate_kbar(benchmark::State& state) {
    set_workers(static_cast<int>(state.range(1)));
    ClassSpec spec = ClassSpec::kbar_of(preset_template("e:3"));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            enumerate_class(spec, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_enumerate_kbar)->Args({3, 1})->Args({3, 4})->Args({4, 1})->Args({4, 4});

void BM_sap_epos(benchmark::State& state) {
    set_workers(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(has_sap_upto(ClassSpec::epos(), 2));
}
BENCHMARK(BM_sap_epos)->Arg(1)->Arg(4);

} // namespace

BENCHMARK_MAIN();
