// Exact rationals on top of GMP. mpq_class already maintains the canonical
// form we need (coprime, positive denominator, zero = 0/1); this header adds
// the string format used in algebra files ("p/q" or "n") and the reduction
// into a prime field.
#pragma once

#include <gmpxx.h>

#include <string>

#include "algindex/common.hpp"
#include "algindex/prime_field.hpp"

namespace algindex {

using Rat = mpq_class;

template <>
struct ScalarOps<Rat> {
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat zero_like(const Rat&) { return Rat(0); }
    static Rat one_like(const Rat&) { return Rat(1); }
    static Rat exact_div(const Rat& a, const Rat& b) { return Rat(a / b); }
    static std::string str(const Rat& x) { return x.get_str(); }
};

// mpq_class(num, den) does not canonicalize; route fraction construction
// through here so gcd = 1 and den > 0 always hold.
inline Rat make_rat(long num, long den) {
    if (den == 0) throw input_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts optional leading '-', decimal digits, optional "/q". Throws
// input_error on anything else (including zero denominators).
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    for (char ch : text)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
            throw input_error("bad rational literal \"" + text + "\"");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, text.c_str(), 10) != 0) {
        mpq_clear(q);
        throw input_error("bad rational literal \"" + text + "\"");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw input_error("zero denominator in \"" + text + "\"");
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

inline std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);  // p < 2^62 fits unsigned long on LP64
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

// Image of a rational in F_p. Fails only when p divides the denominator,
// which cannot happen for desk-scale tables and the default 62-bit prime.
inline Fp to_fp(const Rat& x, std::uint64_t p) {
    std::uint64_t num = mpz_mod_u64(x.get_num(), p);
    std::uint64_t den = mpz_mod_u64(x.get_den(), p);
    if (den == 0) throw error("denominator of " + x.get_str() + " vanishes mod " + std::to_string(p));
    return Fp(num, p) / Fp(den, p);
}

}  // namespace algindex
