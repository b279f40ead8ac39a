#include "algindex/structure_constants.hpp"

#include <algorithm>

#include "algindex/elimination.hpp"

namespace algindex {

namespace {

// rows[i*dim + j] lists the nonzero (k, coeff) of e_i e_j
using SparseRow = std::vector<std::pair<std::size_t, const Rat*>>;

std::vector<SparseRow> product_rows(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    std::vector<SparseRow> rows(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseRow& r = rows[i * n + j];
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(sc.at(i, j, k))) r.push_back({k, &sc.at(i, j, k)});
        }
    return rows;
}

}  // namespace

AssociativityResult validate_associativity(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    const auto rows = product_rows(sc);
    std::vector<Rat> acc(n, Rat(0));
    std::vector<std::size_t> touched;
    touched.reserve(n);

    auto accumulate = [&](const SparseRow& outer, auto pick_row, int sign) {
        for (const auto& [m, cm] : outer) {
            for (const auto& [l, cl] : rows[pick_row(m)]) {
                if (acc[l] == 0 && std::find(touched.begin(), touched.end(), l) == touched.end())
                    touched.push_back(l);
                if (sign > 0)
                    acc[l] += (*cm) * (*cl);
                else
                    acc[l] -= (*cm) * (*cl);
            }
        }
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // (ei ej) ek - ei (ej ek)
                accumulate(rows[i * n + j], [&](std::size_t m) { return m * n + k; }, +1);
                accumulate(rows[j * n + k], [&](std::size_t m) { return i * n + m; }, -1);
                bool ok = true;
                for (std::size_t l : touched)
                    if (acc[l] != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) {
                    AssociativityResult res;
                    res.ok = false;
                    res.i = i;
                    res.j = j;
                    res.k = k;
                    res.lhs.assign(n, Rat(0));
                    res.rhs.assign(n, Rat(0));
                    for (const auto& [m, cm] : rows[i * n + j])
                        for (const auto& [l, cl] : rows[m * n + k]) res.lhs[l] += (*cm) * (*cl);
                    for (const auto& [m, cm] : rows[j * n + k])
                        for (const auto& [l, cl] : rows[i * n + m]) res.rhs[l] += (*cm) * (*cl);
                    return res;
                }
                for (std::size_t l : touched) acc[l] = 0;
                touched.clear();
            }
    return {};
}

std::optional<std::vector<Rat>> find_unit(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    if (n == 0) return std::nullopt;
    // unknowns u_i; rows indexed by (j,k): left unit sum_i u_i c[i][j][k] = d_jk,
    // right unit sum_i u_i c[j][i][k] = d_jk
    Matrix<Rat> a(2 * n * n, n, Rat(0));
    std::vector<Rat> b(2 * n * n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t row_l = j * n + k, row_r = n * n + j * n + k;
            for (std::size_t i = 0; i < n; ++i) {
                a(row_l, i) = sc.at(i, j, k);
                a(row_r, i) = sc.at(j, i, k);
            }
            if (j == k) b[row_l] = b[row_r] = Rat(1);
        }
    LinearSolution<Rat> s = solve_linear(a, b);
    if (!s.consistent) return std::nullopt;
    return s.x;
}

std::vector<std::string> symbolic_names(const StructureConstants& sc) {
    auto identifier = [](const std::string& s) {
        if (s.empty()) return false;
        if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
        for (char ch : s)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
        return true;
    };
    std::vector<std::string> names;
    bool all_id = true;
    for (std::size_t i = 0; i < sc.dim(); ++i) {
        names.push_back(sc.label(i));
        all_id = all_id && identifier(names.back());
    }
    if (!all_id)
        for (std::size_t i = 0; i < sc.dim(); ++i) names[i] = "f" + std::to_string(i + 1);
    return names;
}

std::vector<MultiPoly<Rat>> symbolic_functional(const StructureConstants& sc) {
    std::vector<MultiPoly<Rat>> f;
    for (std::size_t i = 0; i < sc.dim(); ++i)
        f.push_back(MultiPoly<Rat>::variable(sc.dim(), i, Rat(1)));
    return f;
}

FpTable::FpTable(const StructureConstants& sc, std::uint64_t prime) : p(prime), dim(sc.dim()) {
    c.resize(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                c[(i * dim + j) * dim + k] = to_fp(sc.at(i, j, k), p).value();
}

Matrix<Fp> FpTable::mult_matrix(const std::vector<Fp>& f) const {
    if (f.size() != dim) throw error("functional has wrong dimension");
    Matrix<Fp> m(dim, dim, Fp::zero(p));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::uint64_t acc = 0;
            const std::uint64_t* row = c.data() + (i * dim + j) * dim;
            for (std::size_t k = 0; k < dim; ++k) {
                if (row[k] == 0) continue;
                acc += mul_mod(row[k], f[k].value(), p);
                if (acc >= p) acc -= p;
            }
            m(i, j) = Fp(acc, p);
        }
    return m;
}

Matrix<Fp> FpTable::commutator_matrix(const std::vector<Fp>& f) const {
    Matrix<Fp> m = mult_matrix(f);
    return m - m.transpose();
}

std::vector<Fp> random_functional(std::size_t dim, std::uint64_t p, SplitMix64& g) {
    std::vector<Fp> f;
    f.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) f.push_back(Fp(g.below(p), p));
    return f;
}

StructureConstants tensor_algebra(const StructureConstants& a, const StructureConstants& b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::string name = (a.name().empty() ? "A" : a.name()) + "(x)" + (b.name().empty() ? "B" : b.name());
    StructureConstants t(n, name);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) {
                const Rat& ca = a.at(i, j, k);
                if (is_zero(ca)) continue;
                for (std::size_t p = 0; p < nb; ++p)
                    for (std::size_t q = 0; q < nb; ++q)
                        for (std::size_t r = 0; r < nb; ++r) {
                            const Rat& cb = b.at(p, q, r);
                            if (is_zero(cb)) continue;
                            t.at(i * nb + p, j * nb + q, k * nb + r) = ca * cb;
                        }
            }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t p = 0; p < nb; ++p) labels.push_back(a.label(i) + "(x)" + b.label(p));
    t.set_labels(std::move(labels));
    if (a.unit() && b.unit()) {
        std::vector<Rat> u(n, Rat(0));
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t p = 0; p < nb; ++p) u[i * nb + p] = (*a.unit())[i] * (*b.unit())[p];
        t.set_unit(std::move(u));
    }
    return t;
}

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    std::string name =
        (a.name().empty() ? "A" : a.name()) + "(+)" + (b.name().empty() ? "B" : b.name());
    StructureConstants s(na + nb, name);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) s.at(i, j, k) = a.at(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) s.at(na + i, na + j, na + k) = b.at(i, j, k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na; ++i) labels.push_back("l." + a.label(i));
    for (std::size_t i = 0; i < nb; ++i) labels.push_back("r." + b.label(i));
    s.set_labels(std::move(labels));
    if (a.unit() && b.unit()) {
        std::vector<Rat> u(na + nb, Rat(0));
        for (std::size_t i = 0; i < na; ++i) u[i] = (*a.unit())[i];
        for (std::size_t i = 0; i < nb; ++i) u[na + i] = (*b.unit())[i];
        s.set_unit(std::move(u));
    }
    return s;
}

StructureConstants from_matrix_basis(const std::vector<Matrix<Rat>>& mats,
                                     std::vector<std::string> labels, std::string name) {
    if (mats.empty()) throw input_error("empty matrix basis");
    const std::size_t s = mats[0].rows(), n = mats.size();
    for (const auto& m : mats)
        if (m.rows() != s || m.cols() != s) throw input_error("matrix basis members differ in shape");

    // columns of B are the flattened basis matrices
    Matrix<Rat> basis(s * s, n, Rat(0));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = 0; c < s; ++c) basis(r * s + c, v) = mats[v](r, c);
    if (rank_kernel(basis).rank != n) throw input_error("dependent basis");

    StructureConstants sc(n, std::move(name));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<Rat> prod = mats[i] * mats[j];
            std::vector<Rat> rhs(s * s, Rat(0));
            for (std::size_t r = 0; r < s; ++r)
                for (std::size_t c = 0; c < s; ++c) rhs[r * s + c] = prod(r, c);
            LinearSolution<Rat> sol = solve_linear(basis, rhs);
            if (!sol.consistent)
                throw input_error("not multiplicatively closed: product of basis elements " +
                                  std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " leaves the span");
            for (std::size_t k = 0; k < n; ++k) sc.at(i, j, k) = sol.x[k];
        }
    if (!labels.empty()) sc.set_labels(std::move(labels));
    return sc;
}

}  // namespace algindex
