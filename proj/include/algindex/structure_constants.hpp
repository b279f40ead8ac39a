// A finite-dimensional associative algebra given by its structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k with exact rational c. Everything else in
// the library consumes this representation, either directly over Q, reduced
// mod p (FpTable), or with the functional coordinates left symbolic.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algindex/matrix.hpp"
#include "algindex/multipoly.hpp"
#include "algindex/prime_field.hpp"
#include "algindex/rational.hpp"
#include "algindex/rng.hpp"

namespace algindex {

class StructureConstants {
  public:
    StructureConstants(std::size_t dim, std::string name = "")
        : dim_(dim), name_(std::move(name)), c_(dim * dim * dim, Rat(0)) {}

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    Rat& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    const std::optional<std::vector<Rat>>& unit() const { return unit_; }
    void set_unit(std::vector<Rat> u) { unit_ = std::move(u); }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
    std::string label(std::size_t i) const {
        return i < labels_.size() ? labels_[i] : "e" + std::to_string(i + 1);
    }

    // coordinates of x*y for coordinate vectors over any scalar that Rat
    // converts into (Rat itself, Fp, MultiPoly)
    template <typename K>
    std::vector<K> multiply(const std::vector<K>& x, const std::vector<K>& y, const K& kzero) const;

  private:
    std::size_t dim_;
    std::string name_;
    std::vector<Rat> c_;
    std::optional<std::vector<Rat>> unit_;
    std::vector<std::string> labels_;
};

// --- scalar embeddings of the rational table -------------------------------

inline Rat convert_rat(const Rat& x, const Rat&) { return x; }
inline Fp convert_rat(const Rat& x, const Fp& exemplar) { return to_fp(x, exemplar.modulus()); }
template <typename K>
MultiPoly<K> convert_rat(const Rat& x, const MultiPoly<K>& exemplar) {
    return MultiPoly<K>::constant(exemplar.nvars(), convert_rat(x, exemplar.kzero()));
}

template <typename K>
std::vector<K> StructureConstants::multiply(const std::vector<K>& x, const std::vector<K>& y,
                                            const K& kzero) const {
    if (x.size() != dim_ || y.size() != dim_) throw error("coordinate vector has wrong dimension");
    std::vector<K> out(dim_, kzero);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (is_zero(y[j])) continue;
            K xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rat& c = at(i, j, k);
                if (is_zero(c)) continue;
                out[k] = out[k] + xy * convert_rat(c, kzero);
            }
        }
    }
    return out;
}

// --- associativity ----------------------------------------------------------

struct AssociativityResult {
    bool ok = true;
    std::size_t i = 0, j = 0, k = 0;  // first violating triple when !ok
    std::vector<Rat> lhs, rhs;        // coordinates of (ei ej) ek and ei (ej ek)
};

// Sparse triple check: cost is proportional to the number of nonzero products
// rather than dim^5, which keeps tensor-square tables cheap to validate.
AssociativityResult validate_associativity(const StructureConstants& sc);

// --- units ------------------------------------------------------------------

// Solves u*e_j = e_j and e_j*u = e_j for all j; a two-sided unit is unique
// when it exists.
std::optional<std::vector<Rat>> find_unit(const StructureConstants& sc);

// --- evaluation at a functional ---------------------------------------------

// Multiplication matrix at F: entry (i,j) = F(e_i e_j) = sum_k c[i][j][k] F_k.
template <typename K>
Matrix<K> mult_matrix_at(const StructureConstants& sc, const std::vector<K>& f, const K& kzero) {
    const std::size_t n = sc.dim();
    if (f.size() != n) throw error("functional has wrong dimension");
    Matrix<K> m(n, n, kzero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            K acc = kzero;
            for (std::size_t k = 0; k < n; ++k) {
                const Rat& c = sc.at(i, j, k);
                if (is_zero(c)) continue;
                acc = acc + convert_rat(c, kzero) * f[k];
            }
            m(i, j) = acc;
        }
    return m;
}

// Bracket form at F: M - M^T, exactly skew-symmetric.
template <typename K>
Matrix<K> commutator_matrix_at(const StructureConstants& sc, const std::vector<K>& f, const K& kzero) {
    Matrix<K> m = mult_matrix_at(sc, f, kzero);
    return m - m.transpose();
}

// Symbolic functional: coordinate k is an indeterminate named after the basis
// label (f1..fn when the labels are not identifiers).
std::vector<MultiPoly<Rat>> symbolic_functional(const StructureConstants& sc);
std::vector<std::string> symbolic_names(const StructureConstants& sc);

// --- prime-field fast path ---------------------------------------------------

// The structure constants reduced mod p once, so randomized trials only do
// word arithmetic.
struct FpTable {
    std::uint64_t p = 0;
    std::size_t dim = 0;
    std::vector<std::uint64_t> c;  // same (i*dim + j)*dim + k layout

    FpTable() = default;
    FpTable(const StructureConstants& sc, std::uint64_t prime);

    Matrix<Fp> mult_matrix(const std::vector<Fp>& f) const;
    Matrix<Fp> commutator_matrix(const std::vector<Fp>& f) const;
};

// Uniform coordinates in F_p from the given stream.
std::vector<Fp> random_functional(std::size_t dim, std::uint64_t p, SplitMix64& g);

// --- constructions -----------------------------------------------------------

// Tensor product algebra on the row-major paired basis e_i (x) g_p.
StructureConstants tensor_algebra(const StructureConstants& a, const StructureConstants& b);

// Block-diagonal direct sum.
StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b);

// Structure constants of a multiplicatively closed, linearly independent
// family of square rational matrices; throws input_error with a witness when
// the family is dependent or a product leaves the span.
StructureConstants from_matrix_basis(const std::vector<Matrix<Rat>>& mats,
                                     std::vector<std::string> labels = {}, std::string name = "");

}  // namespace algindex
