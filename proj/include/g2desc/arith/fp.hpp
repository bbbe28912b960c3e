#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "../error.hpp"
#include "rational.hpp"

namespace g2desc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
    }
    return r;
}

/// Inverse of a modulo p (p prime, a != 0 mod p).
inline u64 invmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) raise(errc::division_by_zero, "inverse of 0 mod " + std::to_string(p));
    return powmod(a, p - 2, p);
}

/// Residue modulo a prime p < 2^61.
class FpElem {
public:
    FpElem() = default;
    FpElem(u64 value, u64 p) : v_(value % p), p_(p) {}
    static FpElem from_signed(long long v, u64 p) {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return FpElem(static_cast<u64>(m), p);
    }

    u64 value() const { return v_; }
    u64 modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FpElem operator-() const { return FpElem(v_ == 0 ? 0 : p_ - v_, p_); }
    FpElem& operator+=(const FpElem& o) {
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    FpElem& operator-=(const FpElem& o) {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    FpElem& operator*=(const FpElem& o) {
        v_ = mulmod(v_, o.v_, p_);
        return *this;
    }
    FpElem& operator/=(const FpElem& o) {
        v_ = mulmod(v_, invmod(o.v_, p_), p_);
        return *this;
    }
    friend FpElem operator+(FpElem a, const FpElem& b) { return a += b; }
    friend FpElem operator-(FpElem a, const FpElem& b) { return a -= b; }
    friend FpElem operator*(FpElem a, const FpElem& b) { return a *= b; }
    friend FpElem operator/(FpElem a, const FpElem& b) { return a /= b; }
    friend bool operator==(const FpElem& a, const FpElem& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    FpElem inverse() const { return FpElem(invmod(v_, p_), p_); }
    FpElem pow(u64 e) const { return FpElem(powmod(v_, e, p_), p_); }

    friend std::ostream& operator<<(std::ostream& os, const FpElem& x) { return os << x.v_; }

private:
    u64 v_ = 0;
    u64 p_ = 1;
};

inline bool is_zero(const FpElem& x) { return x.is_zero(); }
inline FpElem zero_like(const FpElem& x) { return FpElem(0, x.modulus()); }
inline FpElem one_like(const FpElem& x) { return FpElem(1, x.modulus()); }
inline FpElem inverse(const FpElem& x) { return x.inverse(); }

inline u64 mod_ui(const Int& n, u64 p) { return mpz_fdiv_ui(n.get_mpz_t(), p); }

/// Image of a rational in F_p; fails when p divides the denominator.
inline FpElem reduce_mod_p(const Rat& x, u64 p) {
    u64 d = mod_ui(x.den(), p);
    if (d == 0) raise(errc::denominator_divisible, "p = " + std::to_string(p) + " divides denominator of " + x.to_string());
    return FpElem(mod_ui(x.num(), p), p) * FpElem(invmod(d, p), p);
}

/// Legendre-symbol style quadratic character in F_p: 0, 1 or -1.
inline int quadratic_character(const FpElem& x) {
    if (x.is_zero()) return 0;
    if (x.modulus() == 2) return 1;
    return x.pow((x.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

} // namespace g2desc
