#include "algindex/charpoly.hpp"

#include <algorithm>

namespace algindex {

BiPoly<Fp> charpoly_at(const FpTable& table, const std::vector<Fp>& f) {
    Matrix<Fp> a = table.mult_matrix(f);
    return det_pencil(a, a.transpose());
}

BiPoly<MultiPoly<Rat>> charpoly_symbolic(const StructureConstants& sc, std::size_t cap) {
    const std::size_t n = sc.dim();
    if (n > cap)
        throw input_error("symbolic charpoly capped at dim " + std::to_string(cap) +
                          "; evaluate at functionals instead for dim " + std::to_string(n));
    // work in Q[f_1..f_n, lam, mu]; split lam/mu exponents afterwards
    const std::size_t nv = n + 2;
    using P = MultiPoly<Rat>;
    const P zero(nv, Rat(0));
    const P lam = P::variable(nv, n, Rat(1));
    const P mu = P::variable(nv, n + 1, Rat(1));
    Matrix<P> m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            P entry = zero;
            for (std::size_t k = 0; k < n; ++k) {
                const Rat& cij = sc.at(i, j, k);
                const Rat& cji = sc.at(j, i, k);
                if (!is_zero(cij)) entry = entry + lam.scaled(cij) * P::variable(nv, k, Rat(1));
                if (!is_zero(cji)) entry = entry + mu.scaled(cji) * P::variable(nv, k, Rat(1));
            }
            m(i, j) = entry;
        }
    P d = det_bareiss(m);

    const P fzero(n, Rat(0));
    BiPoly<P> chi(fzero);
    for (const auto& [mono, coeff] : d.terms()) {
        Mono fpart(mono.begin(), mono.begin() + n);
        chi.add_term(mono[n], mono[n + 1], P::monomial(n, std::move(fpart), coeff));
    }
    return chi;
}

MultiplicityProfile multiplicity_profile(const StructureConstants& sc, std::size_t trials,
                                         std::uint64_t seed, std::uint64_t prime) {
    if (trials == 0) throw input_error("trial count must be >= 1");
    const FpTable table(sc, prime);
    const Fp one = Fp::one(prime), zero = Fp::zero(prime);

    struct Triple {
        std::optional<int> l, m, s;
    };
    std::vector<Triple> per_trial(trials);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 g = substream(seed, t);
        std::vector<Fp> f = random_functional(table.dim, prime, g);
        BiPoly<Fp> chi = charpoly_at(table, f);
        per_trial[t] = {linear_form_multiplicity(chi, one, zero),
                        linear_form_multiplicity(chi, zero, one),
                        linear_form_multiplicity(chi, one, one)};
    }

    auto min_opt = [](std::optional<int> a, std::optional<int> b) {
        if (!a) return b;
        if (!b) return a;
        return std::optional<int>(std::min(*a, *b));
    };
    MultiplicityProfile prof;  // minima stay nullopt only if chi vanished on every sample
    for (const Triple& t : per_trial) {
        prof.m_lambda = min_opt(prof.m_lambda, t.l);
        prof.m_mu = min_opt(prof.m_mu, t.m);
        prof.m_sum = min_opt(prof.m_sum, t.s);
    }
    prof.dim_ker_a_generic = generic_mult_kernel_dim(table, trials, seed);
    prof.index = index_randomized(table, trials, seed).index;
    return prof;
}

}  // namespace algindex
