#include <benchmark/benchmark.h>

#include "idpoly/algorithms.hpp"
#include "idpoly/families.hpp"

using namespace idpoly;

static void BM_brute_force_random(benchmark::State& state) {
    Graph g = make_random(static_cast<int>(state.range(0)), 0.5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(id_brute_force(g));
}
BENCHMARK(BM_brute_force_random)->DenseRange(10, 20, 2);

static void BM_recursive_random(benchmark::State& state) {
    Graph g = make_random(static_cast<int>(state.range(0)), 0.5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(id_recursive(g));
}
BENCHMARK(BM_recursive_random)->DenseRange(10, 20, 2);

static void BM_recursive_path(benchmark::State& state) {
    Graph g = make_path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(id_recursive(g));
}
BENCHMARK(BM_recursive_path)->Arg(50)->Arg(100)->Arg(200)->Arg(300);

static void BM_inclusion_exclusion_random(benchmark::State& state) {
    Graph g = make_random(static_cast<int>(state.range(0)), 0.5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(id_inclusion_exclusion(g));
}
BENCHMARK(BM_inclusion_exclusion_random)->DenseRange(10, 20, 2);

static void BM_essential_formula_random(benchmark::State& state) {
    Graph g = make_random(static_cast<int>(state.range(0)), 0.5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(id_essential_formula(g));
}
BENCHMARK(BM_essential_formula_random)->DenseRange(10, 18, 2);

static void BM_coefficient_formula_random(benchmark::State& state) {
    Graph g = make_random(static_cast<int>(state.range(0)), 0.5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(id_coefficient_formula(g));
}
BENCHMARK(BM_coefficient_formula_random)->DenseRange(10, 18, 2);

static void BM_family_path_closed_form(benchmark::State& state) {
    FamilySpec spec{FamilyKind::path, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(id_family(spec, FamilyVariant::closed_form));
}
BENCHMARK(BM_family_path_closed_form)->Arg(100)->Arg(300);

BENCHMARK_MAIN();
