#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "../arith/fp.hpp"
#include "../kummer.hpp"

namespace g2desc {

inline bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }
inline bool is_prime(u64 n) { return is_prime(Int(static_cast<unsigned long>(n))); }

namespace detail {

inline Int pollard_brent(const Int& n, unsigned long c) {
    auto step = [&](const Int& x) -> Int {
        Int y = x * x + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
        return y;
    };
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
        x = step(x);
        y = step(step(y));
        Int diff = x - y;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        d = gcd(diff, n);
    }
    return d;
}

inline void factor_into(Int n, std::set<Int>& out) {
    if (n < 2) return;
    if (is_prime(n)) {
        out.insert(n);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Int d = pollard_brent(n, c);
        if (d != n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

} // namespace detail

/// Distinct prime divisors of |n|, ascending.
inline std::vector<Int> prime_divisors(Int n) {
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    std::set<Int> out;
    for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.insert(Int(p));
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
        }
    }
    detail::factor_into(n, out);
    return {out.begin(), out.end()};
}

/// Largest prime p with p + 1 - 2g sqrt(p) <= 0: below it the Hasse-Weil bound does not force points.
inline u64 hasse_weil_cutoff(unsigned genus) {
    u64 best = 2;
    for (u64 p = 2; static_cast<double>(p) + 1 <= 2.0 * genus * std::sqrt(static_cast<double>(p)); ++p)
        if (is_prime(p)) best = p;
    return best;
}

inline Int common_denominator(const std::vector<Rat>& xs) {
    Int d = 1;
    for (const auto& x : xs) d = lcm(d, x.den());
    return d;
}

/// Odd primes at which the model y^2 = f(x) has bad reduction: p | disc(f) f6 or p | a denominator.
inline std::vector<Int> bad_odd_primes(const SexticCurve& c) {
    std::set<Int> out;
    const Rat df = c.disc() * c.f6();
    for (const auto& p : prime_divisors(df.num())) out.insert(p);
    for (const auto& p : prime_divisors(df.den())) out.insert(p);
    for (const auto& p : prime_divisors(common_denominator(c.f().coeffs()))) out.insert(p);
    out.erase(Int(2));
    return {out.begin(), out.end()};
}

/// {2} together with the odd bad primes and the odd primes up to `bound`, ascending.
inline std::vector<Int> prime_list(const SexticCurve& c, u64 bound = hasse_weil_cutoff(5)) {
    std::set<Int> out{Int(2)};
    for (const auto& p : bad_odd_primes(c)) out.insert(p);
    for (u64 p = 3; p <= bound; p += 2)
        if (is_prime(p)) out.insert(Int(static_cast<unsigned long>(p)));
    return {out.begin(), out.end()};
}

/// Res(f, delta), the norm of delta up to a power of f6.
inline Rat twist_norm(const SexticCurve& c, const Twist& tw) { return resultant(c.f(), tw.delta().poly(), Rat(1)); }

} // namespace g2desc
