// Serial reference vs OpenMP elimination kernels on prime-field matrices,
// plus the charpoly evaluation loop that sits on top of them.
#include <benchmark/benchmark.h>

#include "algindex/builders.hpp"
#include "algindex/charpoly.hpp"
#include "algindex/elimination.hpp"
#include "algindex/index.hpp"
#include "algindex/rng.hpp"

using namespace algindex;

namespace {

Matrix<Fp> random_fp_matrix(std::size_t n, std::uint64_t seed) {
    SplitMix64 g(seed);
    Matrix<Fp> m(n, n, Fp::zero(kDefaultPrime));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Fp(g.below(kDefaultPrime), kDefaultPrime);
    return m;
}

// rank-deficient input so the kernel construction path is exercised too
Matrix<Fp> random_singular_matrix(std::size_t n, std::uint64_t seed) {
    Matrix<Fp> m = random_fp_matrix(n, seed);
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + m(1, j);
    return m;
}

void bm_rank_kernel_serial(benchmark::State& state) {
    auto m = random_singular_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rank_kernel_serial(m).rank);
}

void bm_rank_kernel_openmp(benchmark::State& state) {
    auto m = random_singular_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rank_kernel_parallel(m).rank);
}

void bm_det_serial(benchmark::State& state) {
    auto m = random_fp_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(det(m, Exec::serial));
}

void bm_det_openmp(benchmark::State& state) {
    auto m = random_fp_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(det(m, Exec::parallel));
}

void bm_index_mat(benchmark::State& state) {
    FpTable table(build_mat(static_cast<std::size_t>(state.range(0))), kDefaultPrime);
    for (auto _ : state) benchmark::DoNotOptimize(index_randomized(table, 5, 0).index);
}

void bm_charpoly_tensor_square(benchmark::State& state) {
    StructureConstants s3 = build_seaweed3();
    FpTable table(tensor_algebra(s3, s3), kDefaultPrime);
    SplitMix64 g(1);
    std::vector<Fp> f = random_functional(table.dim, table.p, g);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly_at(table, f).zero());
}

}  // namespace

BENCHMARK(bm_rank_kernel_serial)->Arg(64)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(bm_rank_kernel_openmp)->Arg(64)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(bm_det_serial)->Arg(64)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(bm_det_openmp)->Arg(64)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(bm_index_mat)->Arg(3)->Arg(5)->Arg(8);
BENCHMARK(bm_charpoly_tensor_square);

BENCHMARK_MAIN();
