// Sparse multivariate polynomials over an exact coefficient field. Terms are
// kept in descending graded-lexicographic order with no zero coefficients, so
// representation, equality and printing are canonical. Exact division (needed
// by fraction-free elimination) cancels leading terms and fails loudly if the
// division leaves a remainder.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "algindex/common.hpp"
#include "algindex/scalar_ops.hpp"

namespace algindex {

using Mono = std::vector<std::uint16_t>;

inline std::size_t mono_degree(const Mono& m) {
    std::size_t d = 0;
    for (auto e : m) d += e;
    return d;
}

// true when a > b in graded-lexicographic order
inline bool grlex_greater(const Mono& a, const Mono& b) {
    std::size_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

template <typename K>
class MultiPoly {
  public:
    using Term = std::pair<Mono, K>;

    // zero polynomial; the coefficient exemplar fixes the field context
    MultiPoly(std::size_t nvars, K kzero) : nvars_(nvars), kzero_(kzero) {}

    static MultiPoly constant(std::size_t nvars, const K& c) {
        MultiPoly p(nvars, zero_like(c));
        if (!is_zero(c)) p.terms_.push_back({Mono(nvars, 0), c});
        return p;
    }
    static MultiPoly variable(std::size_t nvars, std::size_t i, const K& one) {
        MultiPoly p(nvars, zero_like(one));
        Mono m(nvars, 0);
        m[i] = 1;
        p.terms_.push_back({std::move(m), one});
        return p;
    }
    static MultiPoly monomial(std::size_t nvars, Mono m, const K& c) {
        if (m.size() != nvars) throw error("monomial arity mismatch");
        MultiPoly p(nvars, zero_like(c));
        if (!is_zero(c)) p.terms_.push_back({std::move(m), c});
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const K& kzero() const { return kzero_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    std::size_t total_degree() const {  // 0 for the zero polynomial
        return terms_.empty() ? 0 : mono_degree(terms_.front().first);
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.front();
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, true); }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r(a.nvars_, a.kzero_);
        if (a.zero() || b.zero()) return r;
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
                prod.push_back({std::move(m), ca * cb});
            }
        std::sort(prod.begin(), prod.end(),
                  [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
        for (auto& t : prod) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first) {
                r.terms_.back().second = r.terms_.back().second + t.second;
                if (is_zero(r.terms_.back().second)) r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    MultiPoly scaled(const K& c) const {
        MultiPoly r(nvars_, kzero_);
        if (is_zero(c)) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }
    MultiPoly divided_by_scalar(const K& c) const {
        if (is_zero(c)) throw error("division of polynomial by zero scalar");
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.second = t.second / c;
        return r;
    }

    // Quotient of an exact division; throws when *this is not a multiple of d.
    MultiPoly exact_quotient(const MultiPoly& d) const {
        check_compatible(d);
        if (d.zero()) throw error("polynomial division by zero");
        MultiPoly q(nvars_, kzero_);
        MultiPoly r = *this;
        const auto& [dm, dc] = d.leading_term();
        while (!r.zero()) {
            const auto& [rm, rc] = r.leading_term();
            Mono m(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (rm[i] < dm[i]) throw error("non-exact polynomial division");
                m[i] = static_cast<std::uint16_t>(rm[i] - dm[i]);
            }
            MultiPoly t(nvars_, kzero_);
            t.terms_.push_back({std::move(m), rc / dc});
            q.terms_.push_back(t.terms_.front());  // leading monomials shrink strictly: stays sorted
            r = r - t * d;
        }
        return q;
    }

    K eval(const std::vector<K>& point) const {
        if (point.size() != nvars_) throw error("evaluation point has wrong arity");
        K acc = kzero_;
        for (const auto& [m, c] : terms_) {
            K term = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (std::uint16_t e = 0; e < m[i]; ++e) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string cs = to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty())
                s += cs;
            else if (cs == "1")
                s += mono;
            else
                s += cs + "*" + mono;
        }
        return s;
    }

  private:
    void check_compatible(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw error("polynomial arity mismatch");
    }

    static MultiPoly merged(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        a.check_compatible(b);
        MultiPoly r(a.nvars_, a.kzero_);
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            bool take_a;
            if (i == a.terms_.size())
                take_a = false;
            else if (j == b.terms_.size())
                take_a = true;
            else if (a.terms_[i].first == b.terms_[j].first) {
                K c = a.terms_[i].second;
                if (subtract)
                    c = c - b.terms_[j].second;
                else
                    c = c + b.terms_[j].second;
                if (!is_zero(c)) r.terms_.push_back({a.terms_[i].first, c});
                ++i, ++j;
                continue;
            } else
                take_a = grlex_greater(a.terms_[i].first, b.terms_[j].first);
            if (take_a)
                r.terms_.push_back(a.terms_[i++]);
            else {
                r.terms_.push_back(b.terms_[j]);
                if (subtract) r.terms_.back().second = -b.terms_[j].second;
                ++j;
            }
        }
        return r;
    }

    std::size_t nvars_;
    K kzero_;
    std::vector<Term> terms_;
};

template <typename K>
struct ScalarOps<MultiPoly<K>> {
    static bool is_zero(const MultiPoly<K>& p) { return p.zero(); }
    static MultiPoly<K> zero_like(const MultiPoly<K>& p) {
        return MultiPoly<K>(p.nvars(), p.kzero());
    }
    static MultiPoly<K> one_like(const MultiPoly<K>& p) {
        return MultiPoly<K>::constant(p.nvars(), algindex::one_like(p.kzero()));
    }
    static MultiPoly<K> exact_div(const MultiPoly<K>& a, const MultiPoly<K>& b) {
        return a.exact_quotient(b);
    }
    static std::string str(const MultiPoly<K>& p) { return p.str({}); }
};

}  // namespace algindex
