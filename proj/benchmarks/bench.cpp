#include "unicell/counting.hpp"
#include "unicell/map.hpp"
#include "unicell/oracle.hpp"
#include "unicell/sampler.hpp"
#include "unicell/surgery.hpp"
#include "unicell/trisection.hpp"

#include <benchmark/benchmark.h>

using namespace unicell;

namespace {

/* Fixed mid-size instances so runs are comparable across changes. */
UnicellularMap fixture(int g, int n) {
    RandomSource rng(12345);
    return sample_map(g, n, rng);
}

void BM_EnumerateMaps(benchmark::State& state) {
    int n = (int)state.range(0);
    long long count = 0;
    for (auto _ : state) {
        count = enumerate_maps(n, [](const UnicellularMap&) {});
        benchmark::DoNotOptimize(count);
    }
    state.counters["maps"] = (double)count;
}
BENCHMARK(BM_EnumerateMaps)->Arg(5)->Arg(6);

void BM_GenusCensus(benchmark::State& state) {
    for (auto _ : state) {
        GenusCensus c = census((int)state.range(0));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_GenusCensus)->Arg(6);

void BM_TourRank(benchmark::State& state) {
    UnicellularMap m = fixture(5, 200);
    for (auto _ : state) {
        TourRank r = tour_rank(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_TourRank);

void BM_TrisectionScan(benchmark::State& state) {
    UnicellularMap m = fixture(5, 200);
    for (auto _ : state) {
        auto t = trisections(m);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TrisectionScan);

void BM_GlueSliceRoundTrip(benchmark::State& state) {
    RandomSource rng(7);
    UnicellularMap tree = sample_plane_tree(100, rng);
    std::vector<int> minima = vertex_minima(tree);
    int a1 = minima[0], a2 = minima[minima.size() / 2], a3 = minima.back();
    for (auto _ : state) {
        UnicellularMap back = slice3(glue3(tree, a1, a2, a3), a1, a2, a3);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_GlueSliceRoundTrip);

void BM_SampleMap(benchmark::State& state) {
    RandomSource rng(99);
    for (auto _ : state) {
        UnicellularMap m = sample_map(2, 50, rng);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_SampleMap);

void BM_CanonicalSerialize(benchmark::State& state) {
    UnicellularMap m = fixture(3, 150);
    for (auto _ : state) {
        std::string s = serialize_canonical(m);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_CanonicalSerialize);

void BM_PolynomialValue(benchmark::State& state) {
    for (auto _ : state) {
        ExactRational r = r_polynomial_value(6, 100000);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PolynomialValue);

void BM_GeneratingIdentity(benchmark::State& state) {
    for (auto _ : state) {
        bool ok = hz_formula_check((int)state.range(0));
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_GeneratingIdentity)->Arg(12);

} // namespace

BENCHMARK_MAIN();
