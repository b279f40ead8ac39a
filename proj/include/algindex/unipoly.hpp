// Dense univariate polynomials over a field, Sylvester-matrix resultants, and
// characteristic polynomials of scalar matrices (fraction-free elimination
// over the polynomial ring, so the result is exact).
#pragma once

#include <string>
#include <vector>

#include "algindex/elimination.hpp"
#include "algindex/matrix.hpp"

namespace algindex {

template <typename K>
class UniPoly {
  public:
    explicit UniPoly(K kzero) : kzero_(kzero) {}

    static UniPoly constant(const K& c) {
        UniPoly p(zero_like(c));
        if (!is_zero(c)) p.c_.push_back(c);
        return p;
    }
    // from low-order to high-order coefficients
    static UniPoly from_coeffs(std::vector<K> coeffs, const K& kzero) {
        UniPoly p(kzero);
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const K& kzero() const { return kzero_; }
    const K& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kzero_; }
    const K& leading() const {
        if (c_.empty()) throw error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool monic() const { return !c_.empty() && c_.back() == one_like(kzero_); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.kzero_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.kzero_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.normalize();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.kzero_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.kzero_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
        r.normalize();
        return r;
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.kzero_);
        if (a.zero() || b.zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.kzero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }
    UniPoly scaled(const K& s) const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = v * s;
        r.normalize();
        return r;
    }

    K eval(const K& x) const {
        K acc = kzero_;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // division with remainder; requires invertible leading coefficient of d
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& d) {
        if (d.zero()) throw error("polynomial division by zero");
        UniPoly q(a.kzero_), r = a;
        K lc_inv = one_like(d.kzero_) / d.leading();
        while (!r.zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            K f = r.leading() * lc_inv;
            std::vector<K> qc(shift + 1, a.kzero_);
            qc[shift] = f;
            UniPoly t = from_coeffs(std::move(qc), a.kzero_);
            q = q + t;
            r = r - t * d;
        }
        return {q, r};
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += to_string(c_[i]);
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void normalize() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    K kzero_;
    std::vector<K> c_;
};

template <typename K>
struct ScalarOps<UniPoly<K>> {
    static bool is_zero(const UniPoly<K>& p) { return p.zero(); }
    static UniPoly<K> zero_like(const UniPoly<K>& p) { return UniPoly<K>(p.kzero()); }
    static UniPoly<K> one_like(const UniPoly<K>& p) {
        return UniPoly<K>::constant(algindex::one_like(p.kzero()));
    }
    static UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
        auto [q, r] = divrem(a, b);
        if (!r.zero()) throw error("non-exact univariate division");
        return q;
    }
    static std::string str(const UniPoly<K>& p) { return p.str(); }
};

// det of the Sylvester matrix: lc(p)^deg(q) * prod q(alpha) over the roots of
// p. For q = 0 this degenerates; we return 0 when p has roots and 1 when p is
// a nonzero constant (empty product), neither case arises from the callers.
template <typename K>
K resultant(const UniPoly<K>& p, const UniPoly<K>& q) {
    if (p.zero()) throw error("undefined resultant base");
    const K kz = p.kzero();
    if (q.zero()) return p.degree() >= 1 ? kz : one_like(kz);
    const std::size_t n = static_cast<std::size_t>(p.degree());
    const std::size_t m = static_cast<std::size_t>(q.degree());
    if (n == 0 && m == 0) return one_like(kz);
    Matrix<K> s(n + m, n + m, kz);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s(i, i + j) = p.coeff(n - j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s(m + i, i + j) = q.coeff(m - j);
    return det(std::move(s));
}

// det(x*I - A), computed fraction-free over K[x]; monic of degree n.
template <typename K>
UniPoly<K> charpoly_of_matrix(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw error("characteristic polynomial of non-square matrix");
    const K kz = a.zero();
    UniPoly<K> x = UniPoly<K>::from_coeffs({kz, one_like(kz)}, kz);
    Matrix<UniPoly<K>> m(a.rows(), a.cols(), UniPoly<K>(kz));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(i, j) = -UniPoly<K>::constant(a(i, j));
            if (i == j) m(i, j) = m(i, j) + x;
        }
    return det_bareiss(m);
}

}  // namespace algindex
