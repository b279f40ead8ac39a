#include "algindex/index.hpp"

#include <algorithm>

#include "algindex/elimination.hpp"

namespace algindex {

namespace {

template <typename MatrixOf>
std::size_t min_kernel_dim_over_trials(const FpTable& table, std::size_t trials, std::uint64_t seed,
                                       MatrixOf matrix_of) {
    if (trials == 0) throw input_error("trial count must be >= 1");
    std::vector<std::size_t> kdim(trials);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 g = substream(seed, t);
        std::vector<Fp> f = random_functional(table.dim, table.p, g);
        kdim[t] = table.dim - rank_kernel(matrix_of(f)).rank;
    }
    return *std::min_element(kdim.begin(), kdim.end());
}

}  // namespace

IndexReport index_randomized(const FpTable& table, std::size_t trials, std::uint64_t seed) {
    std::size_t index = min_kernel_dim_over_trials(
        table, trials, seed, [&](const std::vector<Fp>& f) { return table.commutator_matrix(f); });
    IndexReport r;
    r.dim = table.dim;
    r.index = index;
    r.generic_rank = table.dim - index;
    r.mode = IndexReport::Mode::randomized;
    r.trials = trials;
    r.seed = seed;
    r.prime = table.p;
    return r;
}

IndexReport index_randomized(const StructureConstants& sc, std::size_t trials, std::uint64_t seed,
                             std::uint64_t prime) {
    return index_randomized(FpTable(sc, prime), trials, seed);
}

IndexReport index_symbolic(const StructureConstants& sc, std::size_t cap) {
    if (sc.dim() > cap)
        throw input_error("symbolic index capped at dim " + std::to_string(cap) +
                          "; use randomized mode for dim " + std::to_string(sc.dim()));
    const MultiPoly<Rat> zero(sc.dim(), Rat(0));
    Matrix<MultiPoly<Rat>> b = commutator_matrix_at(sc, symbolic_functional(sc), zero);
    std::size_t rank = bareiss(std::move(b)).rank;
    IndexReport r;
    r.dim = sc.dim();
    r.generic_rank = rank;
    r.index = sc.dim() - rank;
    r.mode = IndexReport::Mode::symbolic;
    return r;
}

std::size_t generic_mult_kernel_dim(const FpTable& table, std::size_t trials, std::uint64_t seed) {
    return min_kernel_dim_over_trials(
        table, trials, seed, [&](const std::vector<Fp>& f) { return table.mult_matrix(f); });
}

}  // namespace algindex
