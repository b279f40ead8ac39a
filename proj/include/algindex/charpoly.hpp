// The characteristic polynomial chi(lam, mu, F) = det(lam*A + mu*A^T) of an
// algebra at a functional, its divisibility profile, coadjoint
// quasi-invariance, generalized resultants, and the closed form for full
// matrix algebras.
//
// Numeric pencils are expanded by evaluation at the points (1, t), t = 1..n,
// plus (0, 1), then interpolated; everything stays in fast field arithmetic.
// The fully symbolic determinant goes through fraction-free elimination with
// lam and mu adjoined as extra variables.
#pragma once

#include <optional>

#include "algindex/bipoly.hpp"
#include "algindex/elimination.hpp"
#include "algindex/index.hpp"
#include "algindex/report.hpp"
#include "algindex/structure_constants.hpp"
#include "algindex/unipoly.hpp"

namespace algindex {

inline constexpr std::size_t kSymbolicCharpolyCap = 6;

inline Rat small_scalar(const Rat&, long v) { return Rat(v); }
inline Fp small_scalar(const Fp& x, long v) {
    const std::uint64_t p = x.modulus();
    std::uint64_t r = static_cast<std::uint64_t>(v >= 0 ? v : -v) % p;
    return v >= 0 ? Fp(r, p) : -Fp(r, p);
}

// det(lam*M + mu*N) for square scalar matrices: homogeneous of degree n or
// identically zero. The evaluation points (1, t) for t = 1..n and the extra
// point (0, 1) determine all n+1 coefficients.
template <typename K>
BiPoly<K> det_pencil(const Matrix<K>& m, const Matrix<K>& n) {
    if (m.rows() != m.cols() || n.rows() != n.cols() || m.rows() != n.rows())
        throw error("det_pencil needs equal square matrices");
    const std::size_t d = m.rows();
    const K kz = m.zero();
    BiPoly<K> chi(kz);
    if (d == 0) {
        chi.add_term(0, 0, one_like(kz));
        return chi;
    }
    std::vector<K> values(d, kz);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (d >= 16)
#endif
    for (std::size_t k = 1; k <= d; ++k) {
        Matrix<K> s = m + n.scaled(small_scalar(kz, static_cast<long>(k)));
        values[k - 1] = det(std::move(s), Exec::serial);
    }
    K cn = det(n);

    // Vandermonde solve for c_0..c_{d-1} with c_d = det(N) known.
    Matrix<K> v(d, d, kz);
    std::vector<K> rhs(d, kz);
    for (std::size_t k = 1; k <= d; ++k) {
        K t = small_scalar(kz, static_cast<long>(k));
        K pw = one_like(kz);
        for (std::size_t i = 0; i < d; ++i) {
            v(k - 1, i) = pw;
            pw = pw * t;
        }
        rhs[k - 1] = values[k - 1] - cn * pw;  // pw == t^d here
    }
    LinearSolution<K> sol = solve_linear(v, rhs);
    if (!sol.consistent || !sol.unique) throw error("internal: pencil interpolation failed");
    for (std::size_t i = 0; i < d; ++i)
        chi.add_term(static_cast<int>(d - i), static_cast<int>(i), sol.x[i]);
    chi.add_term(0, static_cast<int>(d), cn);
    return chi;
}

// chi at a concrete functional over a scalar field.
template <typename K>
BiPoly<K> charpoly_at(const StructureConstants& sc, const std::vector<K>& f, const K& kzero) {
    Matrix<K> a = mult_matrix_at(sc, f, kzero);
    return det_pencil(a, a.transpose());
}

BiPoly<Fp> charpoly_at(const FpTable& table, const std::vector<Fp>& f);

// Fully symbolic chi; coefficients are polynomials in the functional
// coordinates. Capped: the fraction-free determinant grows quickly.
BiPoly<MultiPoly<Rat>> charpoly_symbolic(const StructureConstants& sc,
                                         std::size_t cap = kSymbolicCharpolyCap);

// Generic multiplicities of lam, mu and (lam + mu) in chi, as minima over
// sampled functionals; nullopt means chi vanished identically on every
// sample.
struct MultiplicityProfile {
    std::optional<int> m_lambda;
    std::optional<int> m_mu;
    std::optional<int> m_sum;
    std::size_t dim_ker_a_generic = 0;
    std::size_t index = 0;
};

MultiplicityProfile multiplicity_profile(const StructureConstants& sc, std::size_t trials,
                                         std::uint64_t seed, std::uint64_t prime);

// --- coadjoint action -------------------------------------------------------

// Matrix of y -> g y g^{-1} in the algebra basis. Requires a unital algebra
// and invertible g (the left-multiplication operator must be regular).
template <typename K>
Matrix<K> left_mult_operator(const StructureConstants& sc, const std::vector<K>& g, const K& kzero) {
    const std::size_t n = sc.dim();
    Matrix<K> l(n, n, kzero);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<K> ej(n, kzero);
        ej[j] = one_like(kzero);
        std::vector<K> col = sc.multiply(g, ej, kzero);
        for (std::size_t k = 0; k < n; ++k) l(k, j) = col[k];
    }
    return l;
}

template <typename K>
std::vector<K> unit_coords(const StructureConstants& sc, const K& kzero) {
    std::optional<std::vector<Rat>> u = sc.unit();
    if (!u) u = find_unit(sc);
    if (!u) throw input_error("algebra has no two-sided unit");
    std::vector<K> out;
    out.reserve(sc.dim());
    for (const Rat& x : *u) out.push_back(convert_rat(x, kzero));
    return out;
}

template <typename K>
std::vector<K> algebra_inverse(const StructureConstants& sc, const std::vector<K>& g, const K& kzero) {
    LinearSolution<K> s = solve_linear(left_mult_operator(sc, g, kzero), unit_coords(sc, kzero));
    if (!s.consistent || !s.unique) throw input_error("element is not invertible");
    return s.x;  // right inverse; two-sided in a finite-dimensional unital algebra
}

template <typename K>
Matrix<K> adjoint_matrix(const StructureConstants& sc, const std::vector<K>& g, const K& kzero) {
    const std::size_t n = sc.dim();
    std::vector<K> ginv = algebra_inverse(sc, g, kzero);
    Matrix<K> ad(n, n, kzero);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<K> ek(n, kzero);
        ek[k] = one_like(kzero);
        std::vector<K> col = sc.multiply(sc.multiply(g, ek, kzero), ginv, kzero);
        for (std::size_t i = 0; i < n; ++i) ad(i, k) = col[i];
    }
    return ad;
}

// (coAd_g F)(y) = F(g^{-1} y g)
template <typename K>
std::vector<K> coadjoint_apply(const StructureConstants& sc, const std::vector<K>& g,
                               const std::vector<K>& f, const K& kzero) {
    const std::size_t n = sc.dim();
    std::vector<K> ginv = algebra_inverse(sc, g, kzero);
    std::vector<K> out(n, kzero);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<K> ek(n, kzero);
        ek[k] = one_like(kzero);
        std::vector<K> w = sc.multiply(ginv, sc.multiply(ek, g, kzero), kzero);
        K acc = kzero;
        for (std::size_t i = 0; i < n; ++i) acc = acc + w[i] * f[i];
        out[k] = acc;
    }
    return out;
}

// chi(coAd_g F) == det(Ad_g)^{-2} chi(F), coefficient by coefficient.
template <typename K>
VerificationReport quasi_invariance_check(const StructureConstants& sc, const std::vector<K>& g,
                                          const std::vector<K>& f, const K& kzero) {
    Matrix<K> ad = adjoint_matrix(sc, g, kzero);
    K d = det(ad);
    if (is_zero(d)) throw error("internal: adjoint operator is singular");
    BiPoly<K> lhs = charpoly_at(sc, coadjoint_apply(sc, g, f, kzero), kzero);
    BiPoly<K> rhs = charpoly_at(sc, f, kzero).scaled_by_scalar(one_like(kzero) / (d * d));
    VerificationReport r;
    r.tag = "thm.charpoly-quasi-invariance";
    r.pass = lhs == rhs;
    r.details["det_ad"] = to_string(d);
    return r;
}

// --- generalized resultant and Mat_n ----------------------------------------

// prod over root pairs (alpha_i, alpha_j) of (lam alpha_i + mu alpha_j),
// evaluated at scalars: resultant(p(x), s(x)) with s the coefficientwise
// scaling of p by powers of -lam and -mu. No root extraction, no division by
// lam, so lam = 0 needs no special route.
template <typename K>
K generalized_resultant(const UniPoly<K>& p, const K& lam, const K& mu) {
    if (!p.monic()) throw input_error("generalized resultant needs a monic polynomial");
    if (is_zero(lam) && is_zero(mu)) throw input_error("both scalars zero");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    const K kz = p.kzero();
    if (n == 0) return one_like(kz);
    std::vector<K> s(n + 1, kz);
    for (std::size_t k = 0; k <= n; ++k) {
        K c = p.coeff(k);
        if (is_zero(c)) continue;
        for (std::size_t i = 0; i < k; ++i) c = c * mu;
        for (std::size_t i = 0; i < n - k; ++i) c = c * lam;
        if ((n + k) % 2 == 1) c = -c;
        s[k] = c;
    }
    return resultant(p, UniPoly<K>::from_coeffs(std::move(s), kz));
}

// Closed form for Mat_n: sign * prod_{i,j} (lam a_i + mu a_j) over the
// eigenvalues of the functional viewed as a matrix, sign = (-1)^(n(n-1)/2);
// reconstructed by interpolation at n^2 + 1 points.
template <typename K>
BiPoly<K> matn_charpoly_reference(std::size_t n, const Matrix<K>& f) {
    if (f.rows() != n || f.cols() != n) throw error("functional matrix has wrong shape");
    const K kz = f.zero();
    UniPoly<K> p = charpoly_of_matrix(f);
    const std::size_t deg = n * n;
    const bool flip = (n * (n - 1) / 2) % 2 == 1;
    auto signed_value = [&](const K& lam, const K& mu) {
        K v = generalized_resultant(p, lam, mu);
        return flip ? -v : v;
    };
    BiPoly<K> chi(kz);
    std::vector<K> values(deg, kz);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (deg >= 16)
#endif
    for (std::size_t k = 1; k <= deg; ++k)
        values[k - 1] = signed_value(one_like(kz), small_scalar(kz, static_cast<long>(k)));
    K cn = signed_value(kz, one_like(kz));

    Matrix<K> v(deg, deg, kz);
    std::vector<K> rhs(deg, kz);
    for (std::size_t k = 1; k <= deg; ++k) {
        K t = small_scalar(kz, static_cast<long>(k));
        K pw = one_like(kz);
        for (std::size_t i = 0; i < deg; ++i) {
            v(k - 1, i) = pw;
            pw = pw * t;
        }
        rhs[k - 1] = values[k - 1] - cn * pw;
    }
    LinearSolution<K> sol = solve_linear(v, rhs);
    if (!sol.consistent || !sol.unique) throw error("internal: resultant interpolation failed");
    for (std::size_t i = 0; i < deg; ++i)
        chi.add_term(static_cast<int>(deg - i), static_cast<int>(i), sol.x[i]);
    chi.add_term(0, static_cast<int>(deg), cn);
    return chi;
}

}  // namespace algindex
