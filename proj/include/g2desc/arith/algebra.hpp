#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "../error.hpp"
#include "poly.hpp"

namespace g2desc {

template <class R>
class AlgElem;

/// R[X] / <m(X)> with deg m >= 1 and unit leading coefficient.
template <class R>
class QuotAlgebra : public std::enable_shared_from_this<QuotAlgebra<R>> {
    struct token {};

public:
    QuotAlgebra(token, UniPoly<R> modulus, R lead_inverse)
        : m_(std::move(modulus)), lead_inv_(std::move(lead_inverse)) {}

    static std::shared_ptr<const QuotAlgebra> make(UniPoly<R> modulus) {
        if (modulus.degree() < 1) raise(errc::invariant_violation, "quotient modulus must have degree >= 1");
        R li = inverse(modulus.lead());
        return std::make_shared<const QuotAlgebra>(token{}, std::move(modulus), std::move(li));
    }
    /// For coefficient rings without a generic inverse; `lead_inverse` must invert the leading coefficient.
    static std::shared_ptr<const QuotAlgebra> make(UniPoly<R> modulus, R lead_inverse) {
        if (modulus.degree() < 1) raise(errc::invariant_violation, "quotient modulus must have degree >= 1");
        if (!(lead_inverse * modulus.lead() == one_like(lead_inverse)))
            raise(errc::non_invertible_lead, "leading coefficient of modulus is not a unit");
        return std::make_shared<const QuotAlgebra>(token{}, std::move(modulus), std::move(lead_inverse));
    }

    const UniPoly<R>& modulus() const { return m_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.degree()); }
    R zero() const { return zero_like(m_.lead()); }
    R one() const { return one_like(m_.lead()); }

    AlgElem<R> element(const UniPoly<R>& p) const;
    AlgElem<R> element(std::vector<R> coeffs) const { return element(UniPoly<R>(std::move(coeffs))); }
    AlgElem<R> constant(const R& a) const { return element(UniPoly<R>::constant(a)); }
    AlgElem<R> generator() const { return element(UniPoly<R>::monomial(one(), 1)); }

    UniPoly<R> reduce(const UniPoly<R>& p) const {
        if (p.degree() < m_.degree()) return p;
        return divmod(p, m_, std::optional<R>(lead_inv_)).second;
    }

    bool same_as(const QuotAlgebra& o) const { return this == &o || m_ == o.m_; }

private:
    UniPoly<R> m_;
    R lead_inv_;
};

template <class R>
using AlgebraPtr = std::shared_ptr<const QuotAlgebra<R>>;

/// Element of a quotient algebra, stored as its reduced representative (length = dim).
template <class R>
class AlgElem {
public:
    AlgElem(AlgebraPtr<R> parent, std::vector<R> coeffs) : parent_(std::move(parent)), c_(std::move(coeffs)) {
        if (c_.size() != parent_->dim()) raise(errc::invariant_violation, "coefficient vector length must equal algebra dimension");
    }

    const AlgebraPtr<R>& parent() const { return parent_; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](std::size_t i) const { return c_[i]; }
    UniPoly<R> poly() const { return UniPoly<R>(c_); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!detail::coeff_is_zero(x)) return false;
        return true;
    }

    AlgElem operator-() const {
        auto c = c_;
        for (auto& x : c) x = -x;
        return AlgElem(parent_, std::move(c));
    }
    AlgElem& operator+=(const AlgElem& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    AlgElem& operator-=(const AlgElem& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    AlgElem& operator*=(const AlgElem& o) { return *this = alg_mul(*this, o); }

    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b) { return alg_mul(a, b); }
    friend AlgElem operator*(const R& s, AlgElem a) {
        for (auto& x : a.c_) x = s * x;
        return a;
    }
    friend AlgElem operator*(AlgElem a, const R& s) { return s * std::move(a); }

    friend bool operator==(const AlgElem& a, const AlgElem& b) {
        return a.parent_->same_as(*b.parent_) && a.c_ == b.c_;
    }

    /// Product reduced modulo the modulus; ParentMismatch for elements of different algebras.
    friend AlgElem alg_mul(const AlgElem& a, const AlgElem& b) {
        a.check(b);
        const std::size_t n = a.c_.size();
        std::vector<R> prod(2 * n - 1, a.parent_->zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return a.parent_->element(UniPoly<R>(std::move(prod)));
    }

    friend std::ostream& operator<<(std::ostream& os, const AlgElem& a) { return os << a.poly(); }

private:
    void check(const AlgElem& o) const {
        if (!parent_->same_as(*o.parent_)) raise(errc::parent_mismatch, "elements belong to different algebras");
    }

    AlgebraPtr<R> parent_;
    std::vector<R> c_;
};

template <class R>
AlgElem<R> QuotAlgebra<R>::element(const UniPoly<R>& p) const {
    auto r = reduce(p);
    std::vector<R> c = r.coeffs();
    c.resize(dim(), zero());
    return AlgElem<R>(this->shared_from_this(), std::move(c));
}

template <class R>
bool is_zero(const AlgElem<R>& a) {
    return a.is_zero();
}
template <class R>
AlgElem<R> zero_like(const AlgElem<R>& a) {
    return a.parent()->constant(a.parent()->zero());
}
template <class R>
AlgElem<R> one_like(const AlgElem<R>& a) {
    return a.parent()->constant(a.parent()->one());
}

/// Value of the representative polynomial at t.
template <class R>
R eval_hom(const AlgElem<R>& a, const R& t) {
    return eval_hom(a.poly(), t);
}

/// Unit test via extended Euclid over a field; the inverse when gcd(lift, modulus) = 1.
template <class R>
std::optional<AlgElem<R>> alg_is_unit(const AlgElem<R>& a) {
    const auto& A = *a.parent();
    auto lift = a.poly();
    if (lift.is_zero()) return std::nullopt;
    auto eg = ext_gcd(lift, A.modulus(), A.one());
    if (eg.g.degree() != 0) return std::nullopt;
    return A.element(eg.s);
}

template <class R>
AlgElem<R> alg_pow(AlgElem<R> b, unsigned long long e) {
    AlgElem<R> r = one_like(b);
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        b = b * b;
    }
    return r;
}

} // namespace g2desc

namespace g2desc {

/// Inverse in an algebra over a field; DivisionByZero when the element is not a unit.
template <class R>
AlgElem<R> inverse(const AlgElem<R>& a) {
    auto inv = alg_is_unit(a);
    if (!inv) raise(errc::division_by_zero, "algebra element is not a unit");
    return *inv;
}

} // namespace g2desc
