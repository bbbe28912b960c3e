#pragma once

// Factorization and square roots in F_p[X]/<f> for odd p.

#include <random>
#include <utility>
#include <vector>

#include "../arith/fp.hpp"
#include "../arith/poly.hpp"
#include "../arith/rational.hpp"

namespace g2desc {

using FpPoly = UniPoly<FpElem>;

namespace fp {

inline FpPoly constant(u64 c, u64 p) { return FpPoly::constant(FpElem(c, p)); }
inline FpPoly x(u64 p) { return FpPoly::monomial(FpElem(1, p), 1); }
inline bool is_one(const FpPoly& a) { return a.degree() == 0 && a[0].value() == 1; }

inline FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return poly_mod(a * b, m); }

inline FpPoly powmod(FpPoly b, Int e, const FpPoly& m) {
    const u64 p = m.lead().modulus();
    FpPoly r = poly_mod(constant(1, p), m);
    b = poly_mod(b, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, b, m);
        e >>= 1;
        if (e > 0) b = mulmod(b, b, m);
    }
    return r;
}

inline Int pow_int(u64 p, unsigned d) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, d);
    return r;
}

/// (factor, multiplicity) pairs of a monic polynomial, factors squarefree and pairwise coprime.
inline std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f) {
    const u64 p = f.lead().modulus();
    std::vector<std::pair<FpPoly, unsigned>> out;
    if (f.degree() < 1) return out;
    FpPoly c = poly_gcd(f, derivative(f));
    FpPoly w = poly_div_exact(f, c);
    unsigned i = 1;
    while (!is_one(w)) {
        FpPoly y = poly_gcd(w, c);
        FpPoly fac = poly_div_exact(w, y);
        if (fac.degree() > 0) out.emplace_back(fac, i);
        w = y;
        c = poly_div_exact(c, y);
        ++i;
    }
    if (c.degree() > 0) {
        // c = h(X^p); over F_p, h(X^p) = h(X)^p
        std::vector<FpElem> h;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p) h.push_back(c[k]);
        for (auto& [g, e] : squarefree_decomposition(FpPoly(std::move(h)))) out.emplace_back(g, e * static_cast<unsigned>(p));
    }
    return out;
}

/// Products of the irreducible factors of each degree d, for squarefree monic g.
inline std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly g) {
    const u64 p = g.lead().modulus();
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly h = poly_mod(x(p), g);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(g.degree()); ++d) {
        h = powmod(h, Int(static_cast<unsigned long>(p)), g);
        FpPoly gd = poly_gcd(g, h - x(p));
        if (gd.degree() > 0) {
            out.emplace_back(gd, d);
            g = poly_div_exact(g, gd);
            h = poly_mod(h, g);
        }
    }
    if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
    return out;
}

/// Irreducible factors of g, a product of distinct irreducibles of degree d (Cantor-Zassenhaus, p odd).
inline void equal_degree(const FpPoly& g, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    const u64 p = g.lead().modulus();
    if (static_cast<unsigned>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const Int e = (pow_int(p, d) - 1) / 2;
    std::uniform_int_distribution<u64> coef(0, p - 1);
    while (true) {
        std::vector<FpElem> a(static_cast<std::size_t>(g.degree()));
        for (auto& c : a) c = FpElem(coef(rng), p);
        FpPoly b = powmod(FpPoly(std::move(a)), e, g) - constant(1, p);
        FpPoly h = poly_gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(poly_div_exact(g, h), d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of f with multiplicities, sorted by (degree, coefficients).
inline std::vector<std::pair<FpPoly, unsigned>> factor(const FpPoly& f) {
    const u64 p = f.lead().modulus();
    if (p == 2) raise(errc::invariant_violation, "factorization implemented for odd p only");
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    std::vector<std::pair<FpPoly, unsigned>> out;
    for (const auto& [s, e] : squarefree_decomposition(make_monic(f)))
        for (const auto& [g, d] : distinct_degree(s)) {
            std::vector<FpPoly> irr;
            equal_degree(g, d, rng, irr);
            for (auto& q : irr) out.emplace_back(std::move(q), e);
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        std::vector<u64> ka, kb;
        for (const auto& c : a.first.coeffs()) ka.push_back(c.value());
        for (const auto& c : b.first.coeffs()) kb.push_back(c.value());
        return ka < kb;
    });
    return out;
}

/// Inverse of a modulo m, or a zero polynomial when a is not a unit.
inline FpPoly inverse_mod(const FpPoly& a, const FpPoly& m) {
    const u64 p = m.lead().modulus();
    auto eg = ext_gcd(poly_mod(a, m), m, FpElem(1, p));
    if (eg.g.degree() != 0) return FpPoly{};
    return poly_mod(eg.s, m);
}

/// Square root of u in the field F_p[X]/<phi> (Tonelli-Shanks), if u is a square.
inline std::optional<FpPoly> sqrt_in_field(const FpPoly& u0, const FpPoly& phi) {
    const u64 p = phi.lead().modulus();
    FpPoly u = poly_mod(u0, phi);
    if (u.is_zero()) return u;
    const Int q = pow_int(p, static_cast<unsigned>(phi.degree()));
    const Int half = (q - 1) / 2;
    if (!is_one(powmod(u, half, phi))) return std::nullopt;
    Int m = q - 1;
    unsigned s = 0;
    while (mpz_even_p(m.get_mpz_t())) {
        m >>= 1;
        ++s;
    }
    // deterministic search for a non-square
    std::mt19937_64 rng(0x51ed270b27ULL ^ p);
    std::uniform_int_distribution<u64> coef(0, p - 1);
    FpPoly z;
    while (true) {
        std::vector<FpElem> a(static_cast<std::size_t>(phi.degree()));
        for (auto& c : a) c = FpElem(coef(rng), p);
        z = FpPoly(std::move(a));
        if (z.is_zero()) continue;
        FpPoly t = powmod(z, half, phi);
        if (t.degree() == 0 && t[0].value() == p - 1) break;
    }
    FpPoly c = powmod(z, m, phi);
    FpPoly t = powmod(u, m, phi);
    FpPoly r = powmod(u, (m + 1) / 2, phi);
    unsigned M = s;
    while (!is_one(t)) {
        unsigned i = 0;
        FpPoly tt = t;
        while (!is_one(tt)) {
            tt = mulmod(tt, tt, phi);
            ++i;
        }
        FpPoly b = c;
        for (unsigned k = 0; k + i + 1 < M; ++k) b = mulmod(b, b, phi);
        M = i;
        c = mulmod(b, b, phi);
        t = mulmod(t, c, phi);
        r = mulmod(r, b, phi);
    }
    return r;
}

/// Square root of u modulo phi^e. Zero maps to zero; a nonzero non-unit gives nullopt.
inline std::optional<FpPoly> sqrt_local(const FpPoly& u0, const FpPoly& phi, unsigned e) {
    const u64 p = phi.lead().modulus();
    FpPoly mod = constant(1, p);
    for (unsigned i = 0; i < e; ++i) mod = mod * phi;
    FpPoly u = poly_mod(u0, mod);
    if (u.is_zero()) return u;
    if (poly_mod(u, phi).is_zero()) return std::nullopt;
    auto r0 = sqrt_in_field(u, phi);
    if (!r0) return std::nullopt;
    FpPoly r = *r0;
    const FpElem half = FpElem(2, p).inverse();
    for (unsigned k = 1; k < e; k *= 2) {
        FpPoly inv = inverse_mod(r, mod);
        r = poly_mod(half * (r + mulmod(u, inv, mod)), mod);
    }
    return r;
}

/// F_p[X]/<f> split along f = prod phi_i^e_i.
class SplitAlgebra {
public:
    explicit SplitAlgebra(const FpPoly& f) : f_(make_monic(f)) {
        const u64 p = f_.lead().modulus();
        for (auto& [phi, e] : factor(f_)) {
            FpPoly mod = constant(1, p);
            for (unsigned i = 0; i < e; ++i) mod = mod * phi;
            FpPoly cof = poly_div_exact(f_, mod);
            FpPoly idem = poly_mod(cof * inverse_mod(cof, mod), f_);
            parts_.push_back({phi, e, mod, idem});
        }
    }

    struct Part {
        FpPoly phi;
        unsigned e;
        FpPoly modulus;   ///< phi^e
        FpPoly idempotent; ///< 1 mod phi^e, 0 mod the other parts
    };

    const std::vector<Part>& parts() const { return parts_; }
    const FpPoly& modulus() const { return f_; }

    /// Number of square roots of u; f must be squarefree.
    u64 sqrt_count(const FpPoly& u) const {
        u64 n = 1;
        for (const auto& part : parts_) {
            if (part.e > 1) raise(errc::invariant_violation, "sqrt_count needs a squarefree modulus");
            FpPoly r = poly_mod(u, part.modulus);
            if (r.is_zero()) continue;
            if (!sqrt_in_field(r, part.phi)) return 0;
            n *= 2;
        }
        return n;
    }

    /// Some square root of u, or nullopt (also when a component is a nonzero non-unit).
    std::optional<FpPoly> sqrt(const FpPoly& u) const {
        FpPoly acc{};
        for (const auto& part : parts_) {
            auto r = sqrt_local(u, part.phi, part.e);
            if (!r) return std::nullopt;
            acc += mulmod(*r, part.idempotent, f_);
        }
        return poly_mod(acc, f_);
    }

private:
    FpPoly f_;
    std::vector<Part> parts_;
};

} // namespace fp
} // namespace g2desc
