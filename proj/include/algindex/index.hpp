// Index of the derived Lie algebra: dim minus the generic rank of the bracket
// form. Randomized mode samples functionals over F_p and takes the minimum
// kernel dimension over trials; symbolic mode computes the exact rank of the
// bracket form with indeterminate coordinates by fraction-free elimination.
#pragma once

#include <cstdint>

#include "algindex/structure_constants.hpp"

namespace algindex {

inline constexpr std::size_t kSymbolicIndexCap = 12;
inline constexpr std::size_t kDefaultTrials = 5;

struct IndexReport {
    std::size_t dim = 0;
    std::size_t generic_rank = 0;  // always even: skew form over char != 2
    std::size_t index = 0;         // dim - generic_rank
    enum class Mode { randomized, symbolic } mode = Mode::randomized;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
};

// Trials are independent streams of the seed and run in parallel; the minimum
// over trials is the reported kernel dimension.
IndexReport index_randomized(const FpTable& table, std::size_t trials, std::uint64_t seed);
IndexReport index_randomized(const StructureConstants& sc, std::size_t trials, std::uint64_t seed,
                             std::uint64_t prime);

// Exact rank over the polynomial ring in the functional coordinates.
// Dimensions above the cap are refused with a pointer at randomized mode.
IndexReport index_symbolic(const StructureConstants& sc, std::size_t cap = kSymbolicIndexCap);

// Generic kernel dimension of the multiplication matrix itself (not the
// bracket form): minimum over sampled functionals.
std::size_t generic_mult_kernel_dim(const FpTable& table, std::size_t trials, std::uint64_t seed);

}  // namespace algindex
