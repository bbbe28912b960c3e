#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "../error.hpp"

namespace g2desc {

namespace detail {
// Unqualified so that the element type's overload is found by ADL.
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}
} // namespace detail

/// Dense univariate polynomial; coefficient i multiplies X^i, trailing zeros trimmed.
template <class R>
class UniPoly {
public:
    using coeff_type = R;

    UniPoly() = default;
    explicit UniPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }
    UniPoly(std::initializer_list<R> c) : c_(c) { trim(); }

    static UniPoly constant(const R& a) { return UniPoly(std::vector<R>{a}); }
    static UniPoly monomial(const R& a, std::size_t k) {
        std::vector<R> c(k + 1, zero_like(a));
        c[k] = a;
        return UniPoly(std::move(c));
    }
    /// X - a
    static UniPoly linear_root(const R& a) { return UniPoly(std::vector<R>{-a, one_like(a)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& lead() const { return c_.back(); }
    const R& operator[](std::size_t i) const { return c_[i]; }

    /// Coefficient of X^i, with `zero` returned past the degree.
    R coeff(std::size_t i, const R& zero) const { return i < c_.size() ? c_[i] : zero; }

    UniPoly operator-() const {
        auto c = c_;
        for (auto& x : c) x = -x;
        return UniPoly(std::move(c));
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.reserve(o.c_.size());
            for (std::size_t i = c_.size(); i < o.c_.size(); ++i) c_.push_back(zero_like(o.c_[i]));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const R& s, UniPoly a) {
        for (auto& x : a.c_) x = s * x;
        a.trim();
        return a;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        os << '[';
        for (std::size_t i = 0; i < p.c_.size(); ++i) os << (i ? ", " : "") << p.c_[i];
        return os << ']';
    }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const UniPoly<R>& p) {
    return p.is_zero();
}

/// Value of the polynomial at t (Horner); the evaluation homomorphism R[X] -> R.
template <class R>
R eval_hom(const UniPoly<R>& a, const R& t) {
    R acc = zero_like(t);
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * t + *it;
    return acc;
}

template <class R>
UniPoly<R> derivative(const UniPoly<R>& a) {
    if (a.degree() < 1) return {};
    std::vector<R> c;
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        R k = zero_like(a[i]);
        for (std::size_t j = 0; j < i; ++j) k += one_like(a[i]);
        c.push_back(k * a[i]);
    }
    return UniPoly<R>(std::move(c));
}

namespace detail {
template <class R>
R lead_inverse(const R& lead) {
    try {
        return inverse(lead);
    } catch (const error&) {
        raise(errc::non_invertible_lead, "leading coefficient not a unit");
    }
}
} // namespace detail

/// Polynomial long division by b, whose leading coefficient must be a unit of R.
/// `lead_inverse` lets rings without a generic inverse (e.g. B) supply one.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b,
                                         const std::optional<R>& lead_inverse = std::nullopt) {
    if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    R inv = lead_inverse ? *lead_inverse : detail::lead_inverse(b.lead());
    if (!(inv * b.lead() == one_like(b.lead()))) raise(errc::non_invertible_lead, "leading coefficient not a unit");
    if (a.degree() < b.degree()) return {UniPoly<R>{}, a};
    std::vector<R> r = a.coeffs();
    const int db = b.degree();
    std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1), zero_like(b.lead()));
    for (int k = a.degree() - db; k >= 0; --k) {
        R c = r[static_cast<std::size_t>(k + db)] * inv;
        q[static_cast<std::size_t>(k)] = c;
        if (is_zero(c)) continue;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= c * b[static_cast<std::size_t>(i)];
    }
    r.erase(r.begin() + db, r.end());
    return {UniPoly<R>(std::move(q)), UniPoly<R>(std::move(r))};
}

template <class R>
UniPoly<R> poly_mod(const UniPoly<R>& a, const UniPoly<R>& b) {
    return divmod(a, b).second;
}

/// Quotient q with a = b*q; raises NonzeroRemainder otherwise.
template <class R>
UniPoly<R> poly_div_exact(const UniPoly<R>& a, const UniPoly<R>& b,
                          const std::optional<R>& lead_inverse = std::nullopt) {
    auto [q, r] = divmod(a, b, lead_inverse);
    if (!r.is_zero()) raise(errc::nonzero_remainder, "divisor does not divide dividend exactly");
    return q;
}

template <class R>
UniPoly<R> make_monic(const UniPoly<R>& a) {
    if (a.is_zero()) return a;
    return inverse(a.lead()) * a;
}

/// Monic gcd over a field.
template <class R>
UniPoly<R> poly_gcd(UniPoly<R> a, UniPoly<R> b) {
    while (!b.is_zero()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended Euclid over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class R>
struct ExtGcd {
    UniPoly<R> g, s, t;
};

template <class R>
ExtGcd<R> ext_gcd(const UniPoly<R>& a, const UniPoly<R>& b, const R& one) {
    UniPoly<R> r0 = a, r1 = b;
    UniPoly<R> s0 = UniPoly<R>::constant(one), s1{};
    UniPoly<R> t0{}, t1 = UniPoly<R>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        auto t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R li = inverse(r0.lead());
    return {li * r0, li * s0, li * t0};
}

/// Value of the homogenization of a (as a form of degree `deg`) at (u : v).
template <class R, class S>
R eval_binary(const UniPoly<R>& a, int deg, const S& u, const S& v, const R& zero) {
    R acc = zero;
    for (int i = 0; i <= deg && i <= a.degree(); ++i) {
        S m = one_like(u);
        for (int k = 0; k < i; ++k) m = m * u;
        for (int k = i; k < deg; ++k) m = m * v;
        acc += a[static_cast<std::size_t>(i)] * m;
    }
    return acc;
}

} // namespace g2desc
