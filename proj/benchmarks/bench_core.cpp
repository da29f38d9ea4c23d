#include <benchmark/benchmark.h>

#include "iq/classify.hpp"

#include <random>

using namespace iq;

namespace {

IntMat random_matrix(std::size_t n, int seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    IntMat m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        auto r = smith_normal_form(m);
        benchmark::DoNotOptimize(r.s);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_HermiteNormalForm(benchmark::State& state) {
    IntMat m = random_matrix(static_cast<std::size_t>(state.range(0)), 43);
    for (auto _ : state) {
        IntMat h = hermite_normal_form(m);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_ConeIntersect(benchmark::State& state) {
    std::size_t dim = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rnd_cone = [&] {
        std::vector<std::vector<Int>> gens;
        for (std::size_t i = 0; i < dim + 2; ++i) {
            std::vector<Int> g(dim);
            bool zero = true;
            for (auto& e : g) {
                e = d(rng);
                if (e != 0) zero = false;
            }
            if (zero) g[0] = 1;
            gens.push_back(g);
        }
        return RationalCone::from_generators(dim, gens);
    };
    RationalCone a = rnd_cone(), b = rnd_cone();
    for (auto _ : state) {
        RationalCone c = intersect(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ConeIntersect)->Arg(2)->Arg(3)->Arg(4);

void BM_CoveringCollection(benchmark::State& state) {
    // Type 3 with growing n: the orbit collapse keeps this flat
    std::size_t n = static_cast<std::size_t>(state.range(0));
    FgAbelianGroup z2(2);
    auto e = [&](long a, long b) { return make_element(z2, {Int(a), Int(b)}); };
    std::vector<GroupElement> degs{e(0, 1), e(2, 1)};
    for (std::size_t i = 2; i < n; ++i) degs.push_back(e(1, 1));
    degs.push_back(e(1, 0));
    std::size_t q = n % 2 == 0 ? n : n - 1;
    GradedSetup s(z2, degs, q, n - q, 1);
    for (auto _ : state) {
        QuadricVariety x(s, e(3, 2));
        benchmark::DoNotOptimize(x.covering_collection().size());
    }
}
BENCHMARK(BM_CoveringCollection)->Arg(5)->Arg(9)->Arg(13);

void BM_ClassifyPicard2(benchmark::State& state) {
    std::size_t dim = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto items = enumerate_picard2(dim, 2);
        benchmark::DoNotOptimize(items.size());
    }
}
BENCHMARK(BM_ClassifyPicard2)->Arg(3)->Arg(5)->Arg(7);

void BM_BpfSaturation(benchmark::State& state) {
    FgAbelianGroup z2(2);
    auto e = [&](long a, long b) { return make_element(z2, {Int(a), Int(b)}); };
    GradedSetup s(z2, {e(0, 1), e(2, 1), e(1, 1), e(1, 1), e(1, 1), e(1, 0)}, 4, 1, 1);
    QuadricVariety x(s, e(3, 2));
    for (auto _ : state) {
        bool sat = x.bpf_saturated();
        benchmark::DoNotOptimize(sat);
    }
}
BENCHMARK(BM_BpfSaturation);

}  // namespace

BENCHMARK_MAIN();
