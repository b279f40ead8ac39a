// Exact elimination kernels.
//
// Over a field: Gauss-Jordan reduction with first-nonzero pivoting, giving
// rank, reduced echelon form, kernel bases, determinants and linear solves.
// The row-update sweep exists twice: a serial reference and an OpenMP variant
// that distributes rows across threads. Both perform identical arithmetic per
// row, so their outputs are bitwise equal; tests and the benchmark target hold
// them against each other.
//
// Over a polynomial ring: fraction-free Bareiss elimination (exact divisions
// by the previous pivot), used for symbolic ranks and determinants, plus a
// Cramer-style kernel construction that stays inside the ring.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "algindex/matrix.hpp"
#include "algindex/rational.hpp"

namespace algindex {

enum class Exec { serial, parallel, automatic };

// Row count from which the OpenMP sweep starts paying for itself.
inline constexpr std::size_t kParallelMinRows = 64;

namespace detail {

inline bool run_parallel(Exec policy, std::size_t rows) {
#if defined(_OPENMP)
    if (policy == Exec::parallel) return true;
    if (policy == Exec::automatic) return rows >= kParallelMinRows;
#else
    (void)policy;
    (void)rows;
#endif
    return false;
}

// Subtract f * source row from every non-pivot row, columns [c0, cols).
template <typename F>
void eliminate_rows(Matrix<F>& m, std::size_t pivot_row, std::size_t c0, bool parallel) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const F* src = m.row(pivot_row);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::size_t i = 0; i < rows; ++i) {
        if (i == pivot_row) continue;
        F* dst = m.row(i);
        if (is_zero(dst[c0])) continue;
        F f = dst[c0];
        for (std::size_t j = c0; j < cols; ++j) dst[j] = dst[j] - f * src[j];
    }
    (void)parallel;
}

}  // namespace detail

template <typename F>
struct Rref {
    Matrix<F> m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

template <typename F>
Rref<F> rref(Matrix<F> m, Exec policy = Exec::automatic) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const bool par = detail::run_parallel(policy, rows);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pr, j));
        F pinv = one_like(m(r, c)) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * pinv;
        detail::eliminate_rows(m, r, c, par);
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

template <typename F>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<F>> kernel;  // kernel.size() == cols - rank
};

template <typename F>
std::vector<std::vector<F>> kernel_from_rref(const Rref<F>& r, const F& zero) {
    const std::size_t cols = r.m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(cols, zero);
        v[f] = one_like(zero);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename F>
void verify_in_kernel(const Matrix<F>& m, const std::vector<std::vector<F>>& basis) {
    for (const auto& v : basis)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            F acc = m.zero();
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!is_zero(m(i, j)) && !is_zero(v[j])) acc = acc + m(i, j) * v[j];
            if (!is_zero(acc)) throw error("internal: kernel vector fails M*v = 0");
        }
}

// Exact rank and kernel basis over a field; every reported kernel vector is
// re-checked against the input matrix.
template <typename F>
RankKernel<F> rank_kernel(const Matrix<F>& m, Exec policy = Exec::automatic) {
    Rref<F> r = rref(m, policy);
    RankKernel<F> out;
    out.rank = r.rank;
    out.kernel = kernel_from_rref(r, m.zero());
    verify_in_kernel(m, out.kernel);
    return out;
}

template <typename F>
RankKernel<F> rank_kernel_serial(const Matrix<F>& m) {
    return rank_kernel(m, Exec::serial);
}
template <typename F>
RankKernel<F> rank_kernel_parallel(const Matrix<F>& m) {
    return rank_kernel(m, Exec::parallel);
}

// Determinant by forward elimination with divisions (field entries).
template <typename F>
F det(Matrix<F> m, Exec policy = Exec::automatic) {
    if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    const bool par = detail::run_parallel(policy, n);
    F result = one_like(m.zero());
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = n;
        for (std::size_t i = c; i < n; ++i)
            if (!is_zero(m(i, c))) {
                pr = i;
                break;
            }
        if (pr == n) return m.zero();
        if (pr != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(c, j), m(pr, j));
            negate = !negate;
        }
        const F* src = m.row(c);
        const F piv = m(c, c);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (par)
#endif
        for (std::size_t i = c + 1; i < n; ++i) {
            F* dst = m.row(i);
            if (is_zero(dst[c])) continue;
            F f = dst[c] / piv;
            for (std::size_t j = c; j < n; ++j) dst[j] = dst[j] - f * src[j];
        }
        result = result * piv;
    }
    return negate ? -result : result;
}

template <typename F>
struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    std::vector<F> x;  // a particular solution when consistent
};

// Solves A x = b over a field via the reduced echelon form of [A | b].
template <typename F>
LinearSolution<F> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
    if (a.rows() != b.size()) throw error("solve_linear shape mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1, a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref<F> r = rref(std::move(aug));
    LinearSolution<F> s;
    for (std::size_t c : r.pivot_cols)
        if (c == a.cols()) return s;  // row [0 ... 0 | 1]: inconsistent
    s.consistent = true;
    s.unique = r.rank == a.cols();
    s.x.assign(a.cols(), a.zero());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) s.x[r.pivot_cols[i]] = r.m(i, a.cols());
    return s;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination for ring entries (multivariate polynomials and
// friends). Scalars must provide exact_div(a, b) with b | a.

template <typename R>
struct Bareiss {
    std::size_t rank = 0;
    R det;                               // sign * last pivot when square and regular, zero otherwise
    std::vector<std::size_t> pivot_rows;  // original row indices, in elimination order
    std::vector<std::size_t> pivot_cols;
};

// Pivot search is first nonzero entry in column order, rows top to bottom, so
// symbolic outputs are reproducible.
template <typename R>
Bareiss<R> bareiss(Matrix<R> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Bareiss<R> out{0, m.zero(), {}, {}};
    std::vector<std::size_t> rowperm(rows);
    for (std::size_t i = 0; i < rows; ++i) rowperm[i] = i;
    bool negate = false;
    R prev = one_like(m.zero());
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = k; i < rows; ++i)
            if (!is_zero(m(i, c))) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        if (pr != k) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(pr, j));
            std::swap(rowperm[k], rowperm[pr]);
            negate = !negate;
        }
        const R piv = m(k, c);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = exact_div(piv * m(i, j) - m(i, c) * m(k, j), prev);
            m(i, c) = m.zero();
        }
        out.pivot_rows.push_back(rowperm[k]);
        out.pivot_cols.push_back(c);
        prev = piv;
        ++k;
    }
    out.rank = k;
    if (rows == cols && out.rank == rows && rows > 0) out.det = negate ? -prev : prev;
    if (rows == cols && rows == 0) out.det = one_like(m.zero());
    return out;
}

template <typename R>
R det_bareiss(const Matrix<R>& m) {
    if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
    return bareiss(m).det;
}

// Kernel basis with ring entries: for each free column, the vector of signed
// r x r minors bordering the pivot block. Stays in the ring (no fractions);
// vectors are not primitive in general but satisfy M * v = 0 exactly.
template <typename R>
RankKernel<R> rank_kernel_domain(const Matrix<R>& m) {
    Bareiss<R> br = bareiss(m);
    const std::size_t cols = m.cols(), r = br.rank;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : br.pivot_cols) is_pivot[c] = true;

    Matrix<R> s(r, r, m.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) s(i, j) = m(br.pivot_rows[i], br.pivot_cols[j]);
    const R ds = r == 0 ? one_like(m.zero()) : det_bareiss(s);

    RankKernel<R> out;
    out.rank = r;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<R> v(cols, m.zero());
        v[f] = ds;
        for (std::size_t i = 0; i < r; ++i) {
            Matrix<R> si = s;
            for (std::size_t row = 0; row < r; ++row) si(row, i) = m(br.pivot_rows[row], f);
            v[br.pivot_cols[i]] = -det_bareiss(si);
        }
        out.kernel.push_back(std::move(v));
    }
    verify_in_kernel(m, out.kernel);
    return out;
}

}  // namespace algindex
