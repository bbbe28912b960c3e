#pragma once

// p-adic points of Z_delta by refinement of residue classes.
//
// Coordinates: x in Z^5 for a basis of the lattice {v in Z^6 : gamma . v = 0}.
// Classes x + p^k Z_p^5 are refined in five charts (x_i = 1, x_l = 0 mod p for l < i).
// A class is dropped when some form provably has no zero in it:
//   Q(x + p^k y) = Q(x) + p^k grad Q(x) . y + p^(2k) Q_free(y),
// so a zero needs v(Q(x)) >= min(k + v(grad Q(x)), 2k + v(content Q_free)).

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "../descent.hpp"
#include "fp_poly.hpp"
#include "primes.hpp"
#include "reduced.hpp"
#include "scan.hpp"

namespace g2desc {

enum class Status { solvable, empty, unknown };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::solvable: return "solvable";
    case Status::empty: return "empty";
    case Status::unknown: return "unknown";
    }
    return "?";
}

using Vec5 = std::array<Int, 5>;
using Vec6 = std::array<Int, 6>;

/// x mod p^precision with a 3x3 Jacobian minor of valuation t and v(Q_j(x)) >= 2t + 1.
struct Witness {
    unsigned chart = 0;
    int precision = 1;
    int minor_valuation = 0;
    Vec5 lattice; ///< coordinates in the lattice basis
    Vec6 v;       ///< dual coordinates (v1, ..., v6)
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct SolvabilityVerdict {
    u64 prime = 0;
    Status status = Status::unknown;
    int depth = 0;
    std::optional<Witness> witness;
    std::string method; ///< "count", "search", or "fiber-search"
    std::uint64_t nodes = 0;
    friend bool operator==(const SolvabilityVerdict&, const SolvabilityVerdict&) = default;
};

namespace padic {

/// Quadratic form sum_{a <= b} c[a][b] x_a x_b.
struct Form {
    std::array<std::array<Int, 5>, 5> c;

    Int eval(const Vec5& x) const {
        Int s = 0;
        for (std::size_t a = 0; a < 5; ++a) {
            if (x[a] == 0) continue;
            Int row = 0;
            for (std::size_t b = a; b < 5; ++b)
                if (c[a][b] != 0) row += c[a][b] * x[b];
            s += row * x[a];
        }
        return s;
    }
    Int partial(std::size_t l, const Vec5& x) const {
        Int s = 2 * c[l][l] * x[l];
        for (std::size_t a = 0; a < l; ++a) s += c[a][l] * x[a];
        for (std::size_t b = l + 1; b < 5; ++b) s += c[l][b] * x[b];
        return s;
    }
    std::vector<Int> flat() const {
        std::vector<Int> r;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a; b < 5; ++b) r.push_back(c[a][b]);
        return r;
    }
    static Form from_flat(const std::vector<Int>& r) {
        Form f;
        std::size_t k = 0;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a; b < 5; ++b) f.c[a][b] = r[k++];
        return f;
    }
    friend bool operator==(const Form&, const Form&) = default;
};

inline Int content(const std::vector<Int>& r) {
    Int g = 0;
    for (const auto& x : r) g = gcd(g, x);
    return g;
}

inline Int pmod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int det3(const Int (&m)[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Solutions y in F_p^n of A y = b (A is r x n); nullopt when inconsistent.
struct AffineSpace {
    std::vector<u64> particular;
    std::vector<std::vector<u64>> directions;
};

inline std::optional<AffineSpace> solve_mod_p(std::vector<std::vector<u64>> a, std::vector<u64> b, std::size_t n, u64 p) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows; ++c) {
        std::size_t s = r;
        while (s < rows && a[s][c] == 0) ++s;
        if (s == rows) continue;
        std::swap(a[r], a[s]);
        std::swap(b[r], b[s]);
        const u64 inv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = mulmod(x, inv, p);
        b[r] = mulmod(b[r], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const u64 t = a[i][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - mulmod(t, a[r][j], p)) % p;
            b[i] = (b[i] + p - mulmod(t, b[r], p)) % p;
        }
        piv.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    AffineSpace out;
    out.particular.assign(n, 0);
    for (std::size_t i = 0; i < r; ++i) out.particular[piv[i]] = b[i];
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
        std::vector<u64> d(n, 0);
        d[f] = 1;
        for (std::size_t i = 0; i < r; ++i) d[piv[i]] = (p - a[i][f]) % p;
        out.directions.push_back(std::move(d));
    }
    return out;
}

/// Replaces dependent-mod-p combinations by their quotient by p until the forms are independent mod p.
inline std::array<Form, 3> saturate(std::array<Form, 3> forms, u64 p) {
    const Int P(static_cast<unsigned long>(p));
    for (int guard = 0; guard < 100000; ++guard) {
        std::array<std::vector<Int>, 3> rows;
        for (std::size_t j = 0; j < 3; ++j) rows[j] = forms[j].flat();
        const std::size_t n = rows[0].size();
        std::vector<std::vector<u64>> a(3, std::vector<u64>(n + 3, 0));
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t i = 0; i < n; ++i) a[j][i] = mod_ui(rows[j][i], p);
            a[j][n + j] = 1;
        }
        std::size_t r = 0;
        for (std::size_t c = 0; c < n && r < 3; ++c) {
            std::size_t s = r;
            while (s < 3 && a[s][c] == 0) ++s;
            if (s == 3) continue;
            std::swap(a[r], a[s]);
            const u64 inv = invmod(a[r][c], p);
            for (auto& x : a[r]) x = mulmod(x, inv, p);
            for (std::size_t i = r + 1; i < 3; ++i) {
                const u64 t = a[i][c];
                if (!t) continue;
                for (std::size_t j = 0; j < n + 3; ++j) a[i][j] = (a[i][j] + p - mulmod(t, a[r][j], p)) % p;
            }
            ++r;
        }
        if (r == 3) return forms;
        const auto& rel = a[r]; // zero on the left: a relation among the original rows
        std::size_t pivot = 3;
        for (std::size_t j = 0; j < 3 && pivot == 3; ++j)
            if (rel[n + j] != 0) pivot = j;
        std::vector<Int> comb(n, Int(0));
        for (std::size_t j = 0; j < 3; ++j) {
            const Int cj(static_cast<unsigned long>(rel[n + j]));
            if (cj == 0) continue;
            for (std::size_t i = 0; i < n; ++i) comb[i] += cj * rows[j][i];
        }
        for (auto& x : comb) {
            if (!mpz_divisible_p(x.get_mpz_t(), P.get_mpz_t())) raise(errc::invariant_violation, "saturation relation is not divisible by p");
            x /= P;
        }
        forms[pivot] = Form::from_flat(comb);
    }
    raise(errc::invariant_violation, "saturation did not terminate");
}

struct Node {
    unsigned chart = 0;
    Vec5 x;
    friend bool operator==(const Node&, const Node&) = default;
};

} // namespace padic

/// Integral model of Z_delta over Z_(p) in lattice coordinates.
class IntegralModel {
public:
    IntegralModel(const Genus5Model& m, u64 p) : p_(p), P_(static_cast<unsigned long>(p)) {
        build_lattice(m);
        for (std::size_t j = 0; j < 3; ++j) raw_[j] = integral_form(m.kummer().Q(j).matrix());
        forms_ = padic::saturate(raw_, p);
        for (unsigned i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Int g = 0;
                for (std::size_t a = 0; a < 5; ++a)
                    for (std::size_t b = a; b < 5; ++b)
                        if (a != i && b != i) g = gcd(g, forms_[j].c[a][b]);
                free_content_[i][j] = valuation(g, p);
            }
    }

    u64 p() const { return p_; }
    const std::array<padic::Form, 3>& forms() const { return forms_; }
    const std::array<padic::Form, 3>& raw_forms() const { return raw_; }
    /// True when saturation changed the forms.
    bool saturated() const { return !(forms_ == raw_); }

    /// v = B x
    Vec6 to_dual(const Vec5& x) const {
        Vec6 v;
        for (std::size_t r = 0; r < 6; ++r) {
            Int s = 0;
            for (std::size_t k = 0; k < 5; ++k) s += basis_[r][k] * x[k];
            v[r] = s;
        }
        return v;
    }
    /// Lattice coordinates of an integral v with gamma . v = 0.
    Vec5 from_dual(const Vec6& v) const {
        Vec5 x;
        for (std::size_t r = 0; r < 5; ++r) {
            Int s = 0;
            for (std::size_t k = 0; k < 6; ++k) s += inverse_[r][k] * v[k];
            x[r] = s;
        }
        return x;
    }

    /// Necessary condition for the class of n mod p^k to contain a zero of every form.
    bool keep(const padic::Node& n, int k) const {
        for (std::size_t j = 0; j < 3; ++j) {
            const int vq = valuation(forms_[j].eval(n.x), p_);
            if (vq >= 2 * k + free_content_[n.chart][j]) continue;
            int vg = infinite_valuation;
            for (std::size_t l = 0; l < 5; ++l)
                if (l != n.chart) vg = std::min(vg, valuation(forms_[j].partial(l, n.x), p_));
            if (vq < k + std::min(vg, infinite_valuation - k)) return false;
        }
        return true;
    }

    /// t when some 3x3 minor of the free-variable Jacobian has valuation t and v(Q_j(x)) >= 2t + 1.
    std::optional<int> hensel(const padic::Node& n) const { return hensel_with(forms_, n, p_); }

    static std::optional<int> hensel_with(const std::array<padic::Form, 3>& forms, const padic::Node& n, u64 p) {
        std::array<std::size_t, 4> fr{};
        std::size_t k = 0;
        for (std::size_t l = 0; l < 5; ++l)
            if (l != n.chart) fr[k++] = l;
        Int J[3][4];
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t c = 0; c < 4; ++c) J[j][c] = forms[j].partial(fr[c], n.x);
        int t = infinite_valuation;
        for (std::size_t skip = 0; skip < 4; ++skip) {
            Int m[3][3];
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t c = 0, cc = 0; c < 4; ++c)
                    if (c != skip) m[j][cc++] = J[j][c];
            t = std::min(t, valuation(padic::det3(m), p));
        }
        if (t == infinite_valuation) return std::nullopt;
        for (std::size_t j = 0; j < 3; ++j)
            if (valuation(forms[j].eval(n.x), p) < 2 * t + 1) return std::nullopt;
        return t;
    }

    /// Live children at level k + 1 of a live node at level k >= 1.
    template <class Out>
    bool children(const padic::Node& n, int k, std::uint64_t budget, Out&& out) const {
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p_, static_cast<unsigned long>(k));
        std::vector<std::size_t> fr;
        for (std::size_t l = 0; l < 5; ++l)
            if (l != n.chart) fr.push_back(l);
        std::vector<std::vector<u64>> a(3, std::vector<u64>(4));
        std::vector<u64> b(3);
        for (std::size_t j = 0; j < 3; ++j) {
            const Int q = forms_[j].eval(n.x);
            if (!mpz_divisible_p(q.get_mpz_t(), pk.get_mpz_t())) return true;
            b[j] = (p_ - mod_ui(Int(q / pk), p_)) % p_;
            for (std::size_t c = 0; c < 4; ++c) a[j][c] = mod_ui(forms_[j].partial(fr[c], n.x), p_);
        }
        auto sol = padic::solve_mod_p(a, b, 4, p_);
        if (!sol) return true;
        const std::size_t dim = sol->directions.size();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < dim; ++i) {
            if (total > budget / p_) return false;
            total *= p_;
        }
        std::vector<u64> coef(dim, 0);
        for (std::uint64_t it = 0; it < total; ++it) {
            padic::Node c = n;
            for (std::size_t l = 0; l < 4; ++l) {
                u64 y = sol->particular[l];
                for (std::size_t d = 0; d < dim; ++d) y = (y + mulmod(coef[d], sol->directions[d][l], p_)) % p_;
                if (y) c.x[fr[l]] += pk * Int(static_cast<unsigned long>(y));
            }
            if (keep(c, k + 1)) out(std::move(c));
            for (std::size_t d = 0; d < dim && ++coef[d] == p_; ++d) coef[d] = 0;
        }
        return true;
    }

    /// Forms mod p (p odd) as symmetric matrices in the five lattice coordinates.
    FormSystem reduced_forms() const {
        if (p_ == 2) raise(errc::invariant_violation, "symmetric reduction needs odd p");
        FormSystem fs{p_, 5, {}};
        const u64 half = invmod(2, p_);
        for (const auto& f : forms_) {
            std::vector<u64> m(25);
            for (std::size_t a = 0; a < 5; ++a)
                for (std::size_t b = a; b < 5; ++b) {
                    const u64 c = mod_ui(f.c[a][b], p_);
                    if (a == b) {
                        m[a * 5 + a] = c;
                    } else {
                        m[a * 5 + b] = m[b * 5 + a] = mulmod(c, half, p_);
                    }
                }
            fs.m.push_back(std::move(m));
        }
        return fs;
    }

private:
    void build_lattice(const Genus5Model& m) {
        std::array<Int, 6> g;
        Int den = 1;
        for (const auto& x : m.gamma()) den = lcm(den, x.den());
        for (std::size_t i = 0; i < 6; ++i) g[i] = m.gamma()[i].num() * (den / m.gamma()[i].den());
        Int c = 0;
        for (const auto& x : g) c = gcd(c, x);
        for (auto& x : g) x /= c;
        std::array<std::array<Int, 6>, 6> U{}, V{}; // V = U^{-1}
        for (std::size_t i = 0; i < 6; ++i) U[i][i] = V[i][i] = 1;
        std::array<Int, 6> gu = g;
        for (std::size_t i = 0; i < 5; ++i) {
            const Int a = gu[i], b = gu[5];
            if (a == 0) continue;
            Int d, s, t;
            mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const Int ad = a / d, bd = b / d;
            for (std::size_t r = 0; r < 6; ++r) {
                const Int ci = U[r][i], c5 = U[r][5];
                U[r][i] = bd * ci - ad * c5;
                U[r][5] = s * ci + t * c5;
            }
            for (std::size_t col = 0; col < 6; ++col) {
                const Int ri = V[i][col], r5 = V[5][col];
                V[i][col] = t * ri - s * r5;
                V[5][col] = ad * ri + bd * r5;
            }
            gu[i] = 0;
            gu[5] = d;
        }
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t k = 0; k < 5; ++k) basis_[r][k] = U[r][k];
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t k = 0; k < 6; ++k) inverse_[r][k] = V[r][k];
    }

    /// Primitive integral multiple of x^T B^T M B x, coefficients c_aa = M'_aa, c_ab = 2 M'_ab.
    padic::Form integral_form(const RatMatrix& M) const {
        std::array<std::array<Rat, 5>, 5> mp;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = 0; b < 5; ++b) {
                Rat s;
                for (std::size_t r = 0; r < 6; ++r) {
                    if (basis_[r][a] == 0) continue;
                    for (std::size_t t = 0; t < 6; ++t)
                        if (basis_[t][b] != 0) s += Rat(basis_[r][a]) * M(r, t) * Rat(basis_[t][b]);
                }
                mp[a][b] = s;
            }
        std::vector<Rat> coeffs;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a; b < 5; ++b) coeffs.push_back(a == b ? mp[a][a] : Rat(2) * mp[a][b]);
        Int den = common_denominator(coeffs);
        std::vector<Int> ints;
        for (const auto& x : coeffs) ints.push_back(x.num() * (den / x.den()));
        const Int c = padic::content(ints);
        if (c == 0) raise(errc::invariant_violation, "quadric vanishes on the hyperplane");
        for (auto& x : ints) x /= c;
        return padic::Form::from_flat(ints);
    }

    u64 p_;
    Int P_;
    std::array<std::array<Int, 5>, 6> basis_;
    std::array<std::array<Int, 6>, 5> inverse_;
    std::array<padic::Form, 3> raw_, forms_;
    std::array<std::array<int, 3>, 5> free_content_{};
};

} // namespace g2desc
