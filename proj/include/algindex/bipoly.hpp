// Bivariate polynomials in the formal pair (lam, mu), with coefficients that
// are either field scalars or multivariate polynomials in the functional
// coordinates. This is the carrier for characteristic polynomials: division
// by linear forms a*lam + b*mu, multiplicity extraction, and comparison up to
// a scalar all live here.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "algindex/multipoly.hpp"

namespace algindex {

// The base field of a coefficient type: K itself for scalars, K for
// MultiPoly<K>. Linear-form coefficients and up-to-scalar witnesses are
// always base-field elements.
template <typename C>
struct CoeffTraits {
    using Scalar = C;
    static C from_scalar(const C&, const Scalar& s) { return s; }
    static C scale(const C& c, const Scalar& s) { return c * s; }
    static C div(const C& c, const Scalar& s) { return c / s; }
    // s with a == s*b, if it exists
    static std::optional<Scalar> ratio(const C& a, const C& b) {
        if (is_zero(b)) return std::nullopt;
        Scalar s = a / b;
        if (!(b * s == a)) return std::nullopt;
        return s;
    }
};

template <typename K>
struct CoeffTraits<MultiPoly<K>> {
    using Scalar = K;
    static MultiPoly<K> from_scalar(const MultiPoly<K>& exemplar, const Scalar& s) {
        return MultiPoly<K>::constant(exemplar.nvars(), s);
    }
    static MultiPoly<K> scale(const MultiPoly<K>& c, const Scalar& s) { return c.scaled(s); }
    static MultiPoly<K> div(const MultiPoly<K>& c, const Scalar& s) { return c.divided_by_scalar(s); }
    static std::optional<Scalar> ratio(const MultiPoly<K>& a, const MultiPoly<K>& b) {
        if (b.zero() || a.zero()) return std::nullopt;
        if (a.terms().size() != b.terms().size()) return std::nullopt;
        Scalar s = a.leading_term().second / b.leading_term().second;
        if (!(b.scaled(s) == a)) return std::nullopt;
        return s;
    }
};

template <typename C>
class BiPoly {
  public:
    using Scalar = typename CoeffTraits<C>::Scalar;
    using Key = std::pair<int, int>;  // (deg_lam, deg_mu)

    explicit BiPoly(C czero) : czero_(czero) {}

    static BiPoly monomial(int dl, int dm, const C& c) {
        BiPoly p(zero_like(c));
        if (!is_zero(c)) p.t_.emplace(Key{dl, dm}, c);
        return p;
    }

    const C& czero() const { return czero_; }
    const std::map<Key, C>& terms() const { return t_; }
    bool zero() const { return t_.empty(); }

    const C& coeff(int dl, int dm) const {
        auto it = t_.find({dl, dm});
        return it == t_.end() ? czero_ : it->second;
    }
    void add_term(int dl, int dm, const C& c) {
        if (dl < 0 || dm < 0) throw error("negative exponent in bivariate term");
        auto it = t_.find({dl, dm});
        if (it == t_.end()) {
            if (!is_zero(c)) t_.emplace(Key{dl, dm}, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }

    int total_degree() const {  // 0 for the zero polynomial
        int d = 0;
        for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
        return d;
    }
    bool homogeneous() const {
        if (t_.empty()) return true;
        int d = t_.begin()->first.first + t_.begin()->first.second;
        for (const auto& [k, c] : t_)
            if (k.first + k.second != d) return false;
        return true;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, -c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r(czero_);
        for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.czero_);
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BiPoly scaled(const C& c) const {
        BiPoly r(czero_);
        for (const auto& [k, v] : t_) {
            C w = v * c;
            if (!is_zero(w)) r.t_.emplace(k, std::move(w));
        }
        return r;
    }
    BiPoly scaled_by_scalar(const Scalar& s) const {
        BiPoly r(czero_);
        for (const auto& [k, v] : t_) {
            C w = CoeffTraits<C>::scale(v, s);
            if (!is_zero(w)) r.t_.emplace(k, std::move(w));
        }
        return r;
    }

    C eval(const Scalar& lam, const Scalar& mu) const {
        C acc = czero_;
        for (const auto& [k, c] : t_) {
            C term = c;
            for (int i = 0; i < k.first; ++i) term = CoeffTraits<C>::scale(term, lam);
            for (int i = 0; i < k.second; ++i) term = CoeffTraits<C>::scale(term, mu);
            acc = acc + term;
        }
        return acc;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& coeff_names = {}) const {
        if (t_.empty()) return "0";
        std::string s;
        // highest lam-degree first reads like the worked examples
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (!s.empty()) s += " + ";
            s += "(" + coeff_str(c, coeff_names) + ")";
            if (k.first) s += "*lam" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second) s += "*mu" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        return s;
    }

  private:
    static std::string coeff_str(const C& c, const std::vector<std::string>& names) {
        if constexpr (std::is_same_v<C, Scalar>) {
            (void)names;
            return to_string(c);
        } else {
            return c.str(names);
        }
    }

    C czero_;
    std::map<Key, C> t_;
};

template <typename C>
struct ScalarOps<BiPoly<C>> {
    static bool is_zero(const BiPoly<C>& p) { return p.zero(); }
    static BiPoly<C> zero_like(const BiPoly<C>& p) { return BiPoly<C>(p.czero()); }
    static BiPoly<C> one_like(const BiPoly<C>& p) {
        return BiPoly<C>::monomial(0, 0, algindex::one_like(p.czero()));
    }
    static std::string str(const BiPoly<C>& p) { return p.str(); }
};

// Division by the linear form a*lam + b*mu: returns (quotient, remainder)
// with remainder free of lam when a != 0 (free of mu when a == 0). The
// remainder is zero exactly when the form divides p.
template <typename C>
std::pair<BiPoly<C>, BiPoly<C>> divide_linear_form(const BiPoly<C>& p,
                                                   const typename BiPoly<C>::Scalar& a,
                                                   const typename BiPoly<C>::Scalar& b) {
    using T = CoeffTraits<C>;
    if (is_zero(a) && is_zero(b)) throw error("zero linear form");
    BiPoly<C> q(p.czero()), r = p;
    if (!is_zero(a)) {
        while (!r.zero()) {
            auto it = r.terms().rbegin();  // largest (deg_lam, deg_mu); keys sort by deg_lam first
            const auto [dl, dm] = it->first;
            if (dl == 0) break;
            C t = T::div(it->second, a);
            q.add_term(dl - 1, dm, t);
            r.add_term(dl, dm, -T::scale(t, a));
            r.add_term(dl - 1, dm + 1, -T::scale(t, b));
        }
    } else {
        for (const auto& [k, c] : p.terms()) {
            if (k.second == 0) continue;
            q.add_term(k.first, k.second - 1, T::div(c, b));
        }
        r = p - BiPoly<C>::monomial(0, 1, T::from_scalar(p.czero(), b)) * q;
    }
    return {q, r};
}

// Exact quotient; the quotient is re-multiplied against p before returning.
// Throws with the remainder rendered into the message otherwise.
template <typename C>
BiPoly<C> divide_bipoly_exact(const BiPoly<C>& p, const typename BiPoly<C>::Scalar& a,
                              const typename BiPoly<C>::Scalar& b) {
    auto [q, r] = divide_linear_form(p, a, b);
    if (!r.zero()) throw error("non-exact division by linear form; remainder " + r.str());
    BiPoly<C> form(p.czero());
    form.add_term(1, 0, CoeffTraits<C>::from_scalar(p.czero(), a));
    form.add_term(0, 1, CoeffTraits<C>::from_scalar(p.czero(), b));
    if (!(form * q == p)) throw error("internal: linear-form quotient failed re-multiplication");
    return q;
}

// Largest k with (a*lam + b*mu)^k dividing p; nullopt means infinite (p = 0).
template <typename C>
std::optional<int> linear_form_multiplicity(const BiPoly<C>& p, const typename BiPoly<C>::Scalar& a,
                                            const typename BiPoly<C>::Scalar& b) {
    if (is_zero(a) && is_zero(b)) throw error("zero linear form");
    if (p.zero()) return std::nullopt;
    int k = 0;
    BiPoly<C> cur = p;
    while (true) {
        auto [q, r] = divide_linear_form(cur, a, b);
        if (!r.zero()) return k;
        cur = std::move(q);
        ++k;
        if (cur.zero()) return k;  // p was a pure power of the form
    }
}

// a base-field one derived from a coefficient exemplar
template <typename C>
typename CoeffTraits<C>::Scalar one_like_scalar(const C& exemplar) {
    if constexpr (std::is_same_v<C, typename CoeffTraits<C>::Scalar>)
        return one_like(exemplar);
    else
        return one_like(exemplar.kzero());
}

// The scalar c with p == c * q, when one exists. Both zero gives c = 1.
template <typename C>
std::optional<typename BiPoly<C>::Scalar> equal_up_to_scalar(const BiPoly<C>& p, const BiPoly<C>& q) {
    using T = CoeffTraits<C>;
    if (p.zero() && q.zero()) return one_like_scalar<C>(p.czero());
    if (p.zero() || q.zero()) return std::nullopt;
    if (p.terms().size() != q.terms().size()) return std::nullopt;
    auto itp = p.terms().begin();
    auto itq = q.terms().begin();
    if (itp->first != itq->first) return std::nullopt;
    auto s = T::ratio(itp->second, itq->second);
    if (!s) return std::nullopt;
    if (!(q.scaled_by_scalar(*s) == p)) return std::nullopt;
    return s;
}

}  // namespace algindex
