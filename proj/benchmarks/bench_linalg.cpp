#include <benchmark/benchmark.h>

#include "orthokit/generators.hpp"
#include "orthokit/linalg.hpp"
#include "orthokit/pythagoras.hpp"
#include "orthokit/rng.hpp"

namespace {

using namespace orthokit;

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const ComplexMatrix g = rng.gaussian(n, n);
    return g + g.adjoint();
}

void bm_hermitian_eig(benchmark::State& state) {
    const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(bm_hermitian_eig)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_operator_norm(benchmark::State& state) {
    Rng rng(2);
    const auto m = rng.gaussian(static_cast<std::size_t>(state.range(0)),
                                static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(operator_norm(m));
}
BENCHMARK(bm_operator_norm)->Arg(4)->Arg(16)->Arg(64);

void bm_defect_profile(benchmark::State& state) {
    const MatrixPair p = canonical_pair();
    GridSpec grid = GridSpec::defaults();
    for (auto _ : state) benchmark::DoNotOptimize(defect_profile(p.a, p.b, grid));
}
BENCHMARK(bm_defect_profile);

}  // namespace
