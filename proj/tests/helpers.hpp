// Shared test utilities. The Leibniz determinant is the independent oracle
// used against the elimination-based determinants: permutation expansion only,
// no shared code path with the library kernels.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "algindex/bipoly.hpp"
#include "algindex/matrix.hpp"
#include "algindex/prime_field.hpp"
#include "algindex/rational.hpp"
#include "algindex/rng.hpp"

namespace algindex::testing {

template <typename T>
T leibniz_det(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T acc = m.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T term = one_like(m.zero());
        for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
        if (inversions % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline Rat random_small_rational(SplitMix64& g) {
    long num = static_cast<long>(g.below(199)) - 99;  // [-99, 99]
    long den = static_cast<long>(g.below(99)) + 1;    // [1, 99]
    return make_rat(num, den);
}

inline Matrix<Rat> random_int_matrix(std::size_t n, SplitMix64& g, long lo = -9, long hi = 9) {
    Matrix<Rat> m(n, n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rat(static_cast<long>(g.below(static_cast<std::uint64_t>(hi - lo + 1))) + lo);
    return m;
}

inline Matrix<Fp> random_fp_matrix(std::size_t rows, std::size_t cols, std::uint64_t p,
                                   SplitMix64& g) {
    Matrix<Fp> m(rows, cols, Fp::zero(p));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Fp(g.below(p), p);
    return m;
}

// k x k matrix of the given rank r: product of random k x r and r x k
inline Matrix<Fp> random_fp_matrix_of_rank(std::size_t k, std::size_t r, std::uint64_t p,
                                           SplitMix64& g) {
    Matrix<Fp> a(k, r, Fp::zero(p)), b(r, k, Fp::zero(p));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j) a(i, j) = Fp(g.below(p), p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) b(i, j) = Fp(g.below(p), p);
    return a * b;
}

// bipoly builders for expected values, e.g. lam_mu(1,1) = lam + mu
inline BiPoly<Rat> bp_rat(std::initializer_list<std::tuple<int, int, Rat>> terms) {
    BiPoly<Rat> p(Rat(0));
    for (const auto& [dl, dm, c] : terms) p.add_term(dl, dm, c);
    return p;
}

}  // namespace algindex::testing
