// Floating-point verification of det(lam A(x)C + mu B(x)D) = det(chi(lam C,
// mu D)) over the complex numbers. The right side is assembled from the
// eigenvalues of A^{-1}B; this is the only non-exact computation in the
// library and it is guarded by a condition bound on A.
#pragma once

#include <complex>

#include "algindex/matrix.hpp"
#include "algindex/rng.hpp"

namespace algindex {

using Cx = std::complex<double>;

template <>
struct ScalarOps<Cx> {
    static bool is_zero(const Cx& z) { return z == Cx(0.0, 0.0); }
    static Cx zero_like(const Cx&) { return Cx(0.0, 0.0); }
    static Cx one_like(const Cx&) { return Cx(1.0, 0.0); }
    static std::string str(const Cx& z) {
        return "(" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) +
               "i)";
    }
};

struct ExtCayleyResult {
    double residual = 0;  // |lhs - rhs| / max(|lhs|, |rhs|)
    Cx lhs, rhs;
    double cond_a = 0;
};

// Throws input_error when cond(A) exceeds the bound (resample A).
ExtCayleyResult ext_cayley_check(const Matrix<Cx>& a, const Matrix<Cx>& b, const Matrix<Cx>& c,
                                 const Matrix<Cx>& d, Cx lam, Cx mu, double cond_bound = 1e8);

// Entries uniform in [-1,1] x [-1,1]i from the given stream.
Matrix<Cx> random_complex_matrix(std::size_t n, SplitMix64& g);

}  // namespace algindex
