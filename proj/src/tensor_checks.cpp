#include "algindex/tensor_checks.hpp"

namespace algindex {

std::vector<Fp> rank_one_functional(const std::vector<Fp>& f, const std::vector<Fp>& g) {
    std::vector<Fp> out;
    out.reserve(f.size() * g.size());
    for (const Fp& x : f)
        for (const Fp& y : g) out.push_back(x * y);
    return out;
}

VerificationReport commutator_decomposition_check(const StructureConstants& sc1,
                                                  const StructureConstants& sc2,
                                                  const std::vector<Fp>& f, const std::vector<Fp>& g) {
    return commutator_decomposition_check(sc1, sc2, tensor_algebra(sc1, sc2), f, g);
}

VerificationReport commutator_decomposition_check(const StructureConstants& sc1,
                                                  const StructureConstants& sc2,
                                                  const StructureConstants& tensor,
                                                  const std::vector<Fp>& f, const std::vector<Fp>& g) {
    if (f.empty() || g.empty()) throw error("empty functional");
    const Fp kz = zero_like(f.empty() ? g[0] : f[0]);
    Matrix<Fp> lhs = commutator_matrix_at(tensor, rank_one_functional(f, g), kz);
    Matrix<Fp> b1 = commutator_matrix_at(sc1, f, kz);
    Matrix<Fp> a1 = mult_matrix_at(sc1, f, kz);
    Matrix<Fp> b2 = commutator_matrix_at(sc2, g, kz);
    Matrix<Fp> a2 = mult_matrix_at(sc2, g, kz);
    Matrix<Fp> rhs = kronecker(b1, a2) + kronecker(a1.transpose(), b2);
    VerificationReport r;
    r.tag = "id.commutator-decomposition";
    r.pass = lhs == rhs;
    r.details["dim"] = tensor.dim();
    if (!r.pass) r.details["note"] = "B(f(x)g) != B1(x)A2 + A1^T(x)B2";
    return r;
}

VerificationReport convexity_check(const StructureConstants& a, const StructureConstants& b,
                                   std::uint64_t seed, std::size_t trials, std::uint64_t prime) {
    IndexReport ia = index_randomized(a, trials, seed, prime);
    IndexReport ib = index_randomized(b, trials, seed, prime);
    IndexReport it = index_randomized(tensor_algebra(a, b), trials, seed, prime);
    VerificationReport r;
    r.tag = "thm.index-convexity";
    std::size_t bound = ia.index * ib.index;
    r.pass = it.index >= bound;
    r.details["ind_a"] = ia.index;
    r.details["ind_b"] = ib.index;
    r.details["ind_tensor"] = it.index;
    r.details["bound"] = bound;
    r.details["slack"] = it.index - std::min(bound, it.index);
    return r;
}

}  // namespace algindex
