// Stabilizer of a functional: Stab_F = { a : F(ax) = F(xa) for all x }, i.e.
// the kernel of the bracket form at F, together with the symmetric form
// Q_F(a,b) = F(ab) on it. The generic non-degeneracy of Q_F is equivalent to
// the (lam+mu)-multiplicity of chi being exactly the index; that equivalence
// is what index_charpoly_agreement asserts.
#pragma once

#include <optional>

#include "algindex/charpoly.hpp"
#include "algindex/elimination.hpp"
#include "algindex/report.hpp"
#include "algindex/structure_constants.hpp"

namespace algindex {

template <typename K>
struct StabilizerData {
    std::vector<K> functional;
    std::vector<std::vector<K>> basis;  // kernel basis of the bracket form at F
    Matrix<K> gram;                     // gram(i,j) = F(s_i s_j)
    K gram_det;
    bool nondegenerate = false;  // empty gram counts as non-degenerate
    bool closure_ok = false;     // every s_i s_j lies back in the kernel
};

template <typename K>
StabilizerData<K> stab_basis(const StructureConstants& sc, const std::vector<K>& f, const K& kzero) {
    Matrix<K> bf = commutator_matrix_at(sc, f, kzero);
    RankKernel<K> rk = rank_kernel(bf);
    StabilizerData<K> out{f, std::move(rk.kernel), Matrix<K>(0, 0, kzero), one_like(kzero), true, true};
    const std::size_t d = out.basis.size();
    out.gram = Matrix<K>(d, d, kzero);

    auto apply_f = [&](const std::vector<K>& w) {
        K acc = kzero;
        for (std::size_t k = 0; k < w.size(); ++k) acc = acc + w[k] * f[k];
        return acc;
    };
    auto in_kernel = [&](const std::vector<K>& w) {
        for (std::size_t i = 0; i < bf.rows(); ++i) {
            K acc = kzero;
            for (std::size_t j = 0; j < bf.cols(); ++j)
                if (!is_zero(bf(i, j)) && !is_zero(w[j])) acc = acc + bf(i, j) * w[j];
            if (!is_zero(acc)) return false;
        }
        return true;
    };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<K> prod = sc.multiply(out.basis[i], out.basis[j], kzero);
            out.gram(i, j) = apply_f(prod);
            if (!in_kernel(prod)) out.closure_ok = false;
        }
    out.gram_det = d == 0 ? one_like(kzero) : det(out.gram);
    out.nondegenerate = !is_zero(out.gram_det);
    return out;
}

// Q_F property bundle at one functional: gram symmetry, restricted
// ad-invariance (c ranging over the stabilizer), unit membership when the
// algebra is unital, and subalgebra closure.
VerificationReport qf_property_check(const StructureConstants& sc, const std::vector<Fp>& f);

struct AgreementRecord {
    std::optional<int> n_sum;  // generic (lam+mu)-multiplicity of chi
    std::size_t index = 0;
    std::size_t stab_dim = 0;  // at the sampled generic functional
    bool q_nondegenerate = false;
    bool agree = false;      // n_sum == index
    bool iff_holds = false;  // agree <=> q_nondegenerate
};

// Samples functionals with the same seed discipline as the index engine,
// computes the multiplicity profile, the index, and Q_F at a functional whose
// stabilizer dimension matches the index.
AgreementRecord index_charpoly_agreement(const StructureConstants& sc, std::uint64_t seed,
                                         std::size_t trials, std::uint64_t prime);

// ind(Mat_N (x) A) = N * ind A for algebras whose (lam+mu)-multiplicity equals
// the index; reports applicable=false when the hypothesis fails.
VerificationReport matN_tensor_index_check(const StructureConstants& sc, std::size_t big_n,
                                           std::uint64_t seed, std::size_t trials, std::uint64_t prime);

}  // namespace algindex
