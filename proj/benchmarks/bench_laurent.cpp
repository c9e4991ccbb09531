#include <benchmark/benchmark.h>

#include "lgpot/expr.hpp"
#include "lgpot/laurent.hpp"

using namespace lgpot;

namespace {

const std::vector<std::string> kVars = {"x", "y"};

LaurentPoly clifford() {
    return parse_poly("x + y + x^-1*y^-1", kVars);
}

} // namespace

static void BM_pow_clifford(benchmark::State& state) {
    LaurentPoly w = clifford();
    auto k = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        LaurentPoly p = w.pow(k);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_pow_clifford)->Arg(3)->Arg(8)->Arg(16)->Arg(32);

static void BM_mul_dense(benchmark::State& state) {
    // (x + y + 1/xy)^k has ~k^2/2 terms; squaring it is a dense convolution.
    LaurentPoly f = clifford().pow(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        LaurentPoly p = f * f;
        benchmark::DoNotOptimize(p);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mul_dense)->Arg(4)->Arg(8)->Arg(16);

static void BM_eval_gaussian(benchmark::State& state) {
    LaurentPoly f = clifford().pow(static_cast<std::uint32_t>(state.range(0)));
    TwistData rho({Scalar::i(), Scalar(GaussianRational(Rational(1, 2), Rational(3)))});
    for (auto _ : state) {
        Scalar v = f.eval(rho);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_eval_gaussian)->Arg(4)->Arg(12);

static void BM_change_basis(benchmark::State& state) {
    LaurentPoly f = clifford().pow(static_cast<std::uint32_t>(state.range(0)));
    UnimodularMatrix a({{1, 0}, {1, 1}});
    for (auto _ : state) {
        LaurentPoly g = f.change_basis(a);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_change_basis)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
