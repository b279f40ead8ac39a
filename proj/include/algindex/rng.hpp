// Deterministic pseudo-random streams. Every randomized computation in the
// library derives its draws from a (seed, stream) pair through SplitMix64, so
// results are reproducible across runs and thread counts.
#pragma once

#include <cstdint>

namespace algindex {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform residue in [0, m). Modulo bias is < m / 2^64, irrelevant at the
    // moduli used here; what matters is that the rule is fixed.
    std::uint64_t below(std::uint64_t m) { return next() % m; }

  private:
    std::uint64_t state_;
};

// Independent generator for the k-th stream of a seed (one stream per trial,
// per matrix, per draw). Streams can be consumed in any order.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed);
    return SplitMix64(g.next() + 0x9e3779b97f4a7c15ull * stream);
}

}  // namespace algindex
