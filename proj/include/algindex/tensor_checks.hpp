// Kronecker-product facts: the determinant identity det(A(x)B) =
// (det A)^n (det B)^k, the kernel bound for B1(x)A2 + A1(x)B2, the bracket
// decomposition of a tensor-product algebra at rank-one functionals, and the
// index convexity inequality ind(A(x)B) >= ind(A) * ind(B).
#pragma once

#include "algindex/elimination.hpp"
#include "algindex/index.hpp"
#include "algindex/matrix.hpp"
#include "algindex/report.hpp"
#include "algindex/structure_constants.hpp"

namespace algindex {

struct KroneckerCheckRecord {
    std::size_t ker_b1 = 0;
    std::size_t ker_b2 = 0;
    std::size_t bound = 0;     // ker_b1 * ker_b2
    std::size_t achieved = 0;  // dim ker(B1(x)A2 + A1(x)B2)
    bool equality = false;
};

template <typename K>
VerificationReport det_tensor_identity_check(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw error("det identity needs square inputs");
    K lhs = det(kronecker(a, b));
    K da = det(a), db = det(b);
    K rhs = one_like(a.zero());
    for (std::size_t i = 0; i < b.rows(); ++i) rhs = rhs * da;
    for (std::size_t i = 0; i < a.rows(); ++i) rhs = rhs * db;
    VerificationReport r;
    r.tag = "thm.det-tensor-product";
    r.pass = lhs == rhs;
    r.details["k"] = a.rows();
    r.details["n"] = b.rows();
    r.details["lhs"] = to_string(lhs);
    r.details["rhs"] = to_string(rhs);
    return r;
}

template <typename K>
KroneckerCheckRecord kernel_sum_dim(const Matrix<K>& b1, const Matrix<K>& a2, const Matrix<K>& a1,
                                    const Matrix<K>& b2) {
    if (b1.rows() != b1.cols() || a1.rows() != a1.cols() || b1.rows() != a1.rows() ||
        b2.rows() != b2.cols() || a2.rows() != a2.cols() || b2.rows() != a2.rows())
        throw error("kernel_sum_dim needs two square pairs of matching sizes");
    Matrix<K> sum = kronecker(b1, a2) + kronecker(a1, b2);
    KroneckerCheckRecord rec;
    rec.ker_b1 = b1.rows() - rank_kernel(b1).rank;
    rec.ker_b2 = b2.rows() - rank_kernel(b2).rank;
    rec.bound = rec.ker_b1 * rec.ker_b2;
    rec.achieved = sum.rows() - rank_kernel(sum).rank;
    rec.equality = rec.achieved == rec.bound;
    if (rec.achieved < rec.bound) throw error("internal: kernel bound violated");
    return rec;
}

// Rank-one functional f(x)g on the tensor algebra, row-major pairing.
std::vector<Fp> rank_one_functional(const std::vector<Fp>& f, const std::vector<Fp>& g);

// Exact identity B(f(x)g) = B1(f)(x)A2(g) + A1(f)^T(x)B2(g) on the tensor
// algebra. The overload with a prebuilt tensor table avoids rebuilding it in
// loops.
VerificationReport commutator_decomposition_check(const StructureConstants& sc1,
                                                  const StructureConstants& sc2,
                                                  const std::vector<Fp>& f, const std::vector<Fp>& g);
VerificationReport commutator_decomposition_check(const StructureConstants& sc1,
                                                  const StructureConstants& sc2,
                                                  const StructureConstants& tensor,
                                                  const std::vector<Fp>& f, const std::vector<Fp>& g);

// Randomized indices of A, B and A(x)B plus the convexity inequality.
VerificationReport convexity_check(const StructureConstants& a, const StructureConstants& b,
                                   std::uint64_t seed, std::size_t trials, std::uint64_t prime);

}  // namespace algindex
