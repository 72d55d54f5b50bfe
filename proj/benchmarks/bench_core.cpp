#include <benchmark/benchmark.h>

#include <random>

#include "toeplab/toeplab.hpp"

using namespace toeplab;

namespace {

HermitianMatrix random_hermitian(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HermitianMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = Complex(u(rng), u(rng));
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

void BM_HermitianEigen(benchmark::State& state) {
    const auto h = random_hermitian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->RangeMultiplier(2)->Range(8, 256)->Unit(benchmark::kMillisecond);

void BM_SmirnovMatrix(benchmark::State& state) {
    std::vector<Complex> c(static_cast<std::size_t>(state.range(0)), 0.0);
    c[0] = 1.0;
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = 0.5 / static_cast<double>((k + 1) * (k + 1));
    const ConformalMap f(c);
    for (auto _ : state) benchmark::DoNotOptimize(operator_norm(smirnov_commutator_matrix(f)));
}
BENCHMARK(BM_SmirnovMatrix)->DenseRange(3, 15, 4);

void BM_BergmanNorm(benchmark::State& state) {
    const auto f = make_example_map(0.5);
    BergmanNormOptions options;
    options.dense_limit = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bergman_commutator_norm(f, options));
}
BENCHMARK(BM_BergmanNorm)->Arg(0)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Torsion(benchmark::State& state) {
    const double h = 1.0 / static_cast<double>(state.range(0));
    const auto grid = discretize(DomainSpec::disc(1), h);
    for (auto _ : state) benchmark::DoNotOptimize(torsional_rigidity(grid));
    state.counters["nodes"] = static_cast<double>(grid.size());
}
BENCHMARK(BM_Torsion)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DirichletEigenvalue(benchmark::State& state) {
    const double h = 1.0 / static_cast<double>(state.range(0));
    const auto grid = discretize(DomainSpec::mapped_disc(make_example_map(0.5)), h);
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_eigenvalue(grid));
    state.counters["nodes"] = static_cast<double>(grid.size());
}
BENCHMARK(BM_DirichletEigenvalue)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_PolydiscMoments(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_moment_integrals(static_cast<int>(state.range(0)), 100000, 1));
}
BENCHMARK(BM_PolydiscMoments)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
