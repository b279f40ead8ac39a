// Arithmetic in Z/p for a large word-sized prime. Elements carry their modulus
// so that generic matrix/polynomial code can stay context-free; the default
// modulus is the largest prime below 2^62, which keeps products inside a
// single 128-bit intermediate and makes random evaluation a reliable stand-in
// for Zariski-generic points.
#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "algindex/common.hpp"
#include "algindex/scalar_ops.hpp"

namespace algindex {

inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ull;  // 2^62 - 57

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

class Fp {
  public:
    Fp() : v_(0), p_(0) {}  // unusable sentinel; every live value is bound to a modulus
    Fp(std::uint64_t value, std::uint64_t prime) : v_(value % prime), p_(prime) {}

    static Fp zero(std::uint64_t prime) { return Fp(0, prime); }
    static Fp one(std::uint64_t prime) { return Fp(1, prime); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        std::uint64_t s = a.v_ + b.v_;  // p < 2^63, no overflow
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_, raw_tag{});
    }
    friend Fp operator-(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, raw_tag{});
    }
    friend Fp operator*(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        return Fp(mul_mod(a.v_, b.v_, a.p_), a.p_, raw_tag{});
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    Fp& operator/=(Fp b) { return *this = *this / b; }

    Fp inverse() const {
        if (v_ == 0) throw error("division by zero in F_p");
        // extended Euclid; coefficients stay below p in magnitude
        __int128 t = 0, newt = 1;
        __int128 r = static_cast<__int128>(p_), newr = static_cast<__int128>(v_);
        while (newr != 0) {
            __int128 q = r / newr;
            __int128 tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<__int128>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_, raw_tag{});
    }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  private:
    struct raw_tag {};
    Fp(std::uint64_t v, std::uint64_t p, raw_tag) : v_(v), p_(p) {}

    std::uint64_t v_;
    std::uint64_t p_;
};

template <>
struct ScalarOps<Fp> {
    static bool is_zero(const Fp& x) { return x.value() == 0; }
    static Fp zero_like(const Fp& x) { return Fp::zero(x.modulus()); }
    static Fp one_like(const Fp& x) { return Fp::one(x.modulus()); }
    static Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
    static std::string str(const Fp& x) { return std::to_string(x.value()); }
};

// Rejects composite or too-small CLI-provided moduli early.
inline void require_odd_prime(std::uint64_t p) {
    if (p < 3 || (p & 1) == 0 || !is_prime_u64(p))
        throw input_error("modulus " + std::to_string(p) + " is not an odd prime");
}

}  // namespace algindex
