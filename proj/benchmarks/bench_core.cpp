#include <benchmark/benchmark.h>

#include "frieze/enumerate.hpp"
#include "frieze/frieze.hpp"
#include "frieze/reduce.hpp"

using namespace frieze;

namespace {

std::vector<RingElement> int_range(long lo, long hi) {
    std::vector<RingElement> out;
    for (long v = lo; v <= hi; ++v) out.push_back(RingElement::integer(v));
    return out;
}

} // namespace

static void BM_FriezeGeneration(benchmark::State& state) {
    QuiddityCycle c = gauss_family(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) {
        FriezePattern f = make_frieze(c);
        benchmark::DoNotOptimize(f);
    }
    state.SetComplexityN(static_cast<int64_t>(c.length()));
}
BENCHMARK(BM_FriezeGeneration)->DenseRange(1, 8)->Complexity();

static void BM_Tameness(benchmark::State& state) {
    FriezePattern f = make_frieze(gauss_family(static_cast<unsigned long>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_tame(f));
    }
}
BENCHMARK(BM_Tameness)->DenseRange(1, 6);

static void BM_EnumerateBox(benchmark::State& state) {
    const size_t m = static_cast<size_t>(state.range(0));
    EnumerationTask task(Domain::integers(), int_range(-2, 2), m);
    for (auto _ : state) {
        auto cycles = enumerate_all(task);
        benchmark::DoNotOptimize(cycles);
    }
}
BENCHMARK(BM_EnumerateBox)->DenseRange(4, 7);

static void BM_EnumerateBoxParallel(benchmark::State& state) {
    EnumerationTask task(Domain::integers(), int_range(-3, 3), 6);
    const unsigned jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto cycles = enumerate_all(task, jobs);
        benchmark::DoNotOptimize(cycles);
    }
}
BENCHMARK(BM_EnumerateBoxParallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_RingReducibility(benchmark::State& state) {
    QuiddityCycle a({RingElement::integer(5), RingElement::integer(0),
                     RingElement::integer(-5), RingElement::integer(0)});
    QuiddityCycle b({RingElement::integer(1), RingElement::integer(1), RingElement::integer(1)});
    QuiddityCycle c = cycle_sum(cycle_sum(a, b), b);
    SubsetSpec ring = SubsetSpec::whole_ring(Domain::integers());
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_reducible(c, ring));
    }
}
BENCHMARK(BM_RingReducibility);

static void BM_Decompose(benchmark::State& state) {
    QuiddityCycle a({RingElement::integer(3), RingElement::integer(0),
                     RingElement::integer(-3), RingElement::integer(0)});
    QuiddityCycle b({RingElement::integer(-1), RingElement::integer(-1),
                     RingElement::integer(-1)});
    QuiddityCycle c = cycle_sum(cycle_sum(cycle_sum(a, b), b), a);
    SubsetSpec ring = SubsetSpec::whole_ring(Domain::integers());
    for (auto _ : state) {
        DecompositionTree t = decompose(c, ring);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Decompose);

BENCHMARK_MAIN();
