#include "algindex/ext_cayley.hpp"

#include <Eigen/Dense>

#include "algindex/common.hpp"

namespace algindex {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix<Cx>& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

}  // namespace

ExtCayleyResult ext_cayley_check(const Matrix<Cx>& a, const Matrix<Cx>& b, const Matrix<Cx>& c,
                                 const Matrix<Cx>& d, Cx lam, Cx mu, double cond_bound) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw error("A and B must be square of the same size");
    if (c.rows() != c.cols() || d.rows() != d.cols() || c.rows() != d.rows())
        throw error("C and D must be square of the same size");
    const std::size_t n = a.rows(), m = c.rows();

    Eigen::MatrixXcd ea = to_eigen(a), eb = to_eigen(b), ec = to_eigen(c), ed = to_eigen(d);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ea);
    double smin = svd.singularValues().minCoeff();
    double smax = svd.singularValues().maxCoeff();
    double cond = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(cond <= cond_bound))
        throw input_error("A is numerically singular (cond " + std::to_string(cond) +
                          "); resample the inputs");

    // lhs: direct determinant of the size-nm pencil
    Matrix<Cx> pencil = kronecker(a, c).scaled(lam) + kronecker(b, d).scaled(mu);
    Cx lhs = to_eigen(pencil).determinant();

    // rhs: det(A)^m * prod_i det(lam C + mu gamma_i D), gamma_i = eig(A^{-1}B)
    Eigen::MatrixXcd ainv_b = ea.partialPivLu().solve(eb);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(ainv_b);
    if (eig.info() != Eigen::Success) throw error("eigenvalue computation failed");
    Cx det_a = ea.determinant();
    Cx rhs = Cx(1.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) rhs *= det_a;
    for (std::size_t i = 0; i < n; ++i) {
        Cx gamma = eig.eigenvalues()(static_cast<Eigen::Index>(i));
        rhs *= (lam * ec + mu * gamma * ed).determinant();
    }

    ExtCayleyResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.cond_a = cond;
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.residual = scale > 0 ? std::abs(lhs - rhs) / scale : 0.0;
    return r;
}

Matrix<Cx> random_complex_matrix(std::size_t n, SplitMix64& g) {
    auto unif = [&g]() { return 2.0 * (static_cast<double>(g.next() >> 11) * 0x1.0p-53) - 1.0; };
    Matrix<Cx> m(n, n, Cx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double re = unif(), im = unif();
            m(i, j) = Cx(re, im);
        }
    return m;
}

}  // namespace algindex
