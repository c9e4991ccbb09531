#include <benchmark/benchmark.h>

#include "lgpot/koszul.hpp"

using namespace lgpot;

namespace {

TwistData generic_twist(std::size_t n) {
    std::vector<Scalar> lambda;
    for (std::size_t i = 0; i < n; ++i)
        lambda.push_back(Scalar(Rational(static_cast<long>(i + 2), 3)));
    return TwistData(std::move(lambda));
}

} // namespace

static void BM_build_complex(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    TwistData twist = generic_twist(n);
    for (auto _ : state) {
        KoszulComplex c(n, twist);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_build_complex)->DenseRange(2, 8);

static void BM_betti_numbers(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    KoszulComplex c(n, generic_twist(n));
    for (auto _ : state) {
        BettiVector b = c.betti_numbers();
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_betti_numbers)->DenseRange(2, 8);
