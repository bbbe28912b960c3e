#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "arith/algebra.hpp"
#include "arith/matrix.hpp"
#include "arith/poly.hpp"
#include "arith/rational.hpp"
#include "arith/resultant.hpp"
#include "error.hpp"

namespace g2desc {

using RatMatrix = Matrix<Rat>;
using RatPoly = UniPoly<Rat>;
using RatAlg = AlgElem<Rat>;

/// y^2 = f(x) with deg f = 6, f squarefree, and a rational root alpha.
class SexticCurve {
public:
    static SexticCurve make(RatPoly f, Rat alpha) {
        if (f.degree() != 6) raise(errc::invariant_violation, "degree: f must have degree exactly 6");
        if (!eval_hom(f, alpha).is_zero()) raise(errc::invariant_violation, "f(alpha) != 0: alpha is not a root of f");
        Rat disc = discriminant(f);
        if (disc.is_zero()) raise(errc::invariant_violation, "discriminant is zero: f is not squarefree");
        return SexticCurve(std::move(f), std::move(alpha), std::move(disc));
    }

    const RatPoly& f() const { return f_; }
    const Rat& alpha() const { return alpha_; }
    const Rat& disc() const { return disc_; }
    /// f_i
    const Rat& coeff(std::size_t i) const { return f_[i]; }
    const Rat& f6() const { return f_[6]; }
    /// L = Q[X]/<f>
    const AlgebraPtr<Rat>& L() const { return L_; }

    friend bool operator==(const SexticCurve& a, const SexticCurve& b) { return a.f_ == b.f_ && a.alpha_ == b.alpha_; }

private:
    SexticCurve(RatPoly f, Rat alpha, Rat disc)
        : f_(std::move(f)), alpha_(std::move(alpha)), disc_(std::move(disc)), L_(QuotAlgebra<Rat>::make(f_)) {}

    RatPoly f_;
    Rat alpha_;
    Rat disc_;
    AlgebraPtr<Rat> L_;
};

/// A unit delta of L.
class Twist {
public:
    static Twist make(const SexticCurve& curve, std::vector<Rat> d) {
        if (d.size() > 6) raise(errc::invariant_violation, "twist has more than six coefficients");
        d.resize(6);
        auto delta = curve.L()->element(std::move(d));
        if (!alg_is_unit(delta)) raise(errc::invariant_violation, "twist not a unit in L");
        return Twist(std::move(delta));
    }

    const RatAlg& delta() const { return delta_; }
    const Rat& d(std::size_t i) const { return delta_[i]; }

    friend bool operator==(const Twist& a, const Twist& b) { return a.delta_ == b.delta_; }

private:
    explicit Twist(RatAlg delta) : delta_(std::move(delta)) {}
    RatAlg delta_;
};

/// Symmetric 6x6 rational matrix; the form is Q(v) = v^T M v.
class SymMat6 {
public:
    explicit SymMat6(RatMatrix m) : m_(std::move(m)) {
        if (m_.rows() != 6 || m_.cols() != 6 || !m_.is_symmetric())
            raise(errc::invariant_violation, "quadric matrix must be symmetric 6x6");
    }

    const RatMatrix& matrix() const { return m_; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    template <class V>
    Rat eval(const V& v) const {
        Rat acc;
        for (std::size_t i = 0; i < 6; ++i) {
            if (v[i].is_zero()) continue;
            Rat row = m_(i, i) * v[i];
            for (std::size_t j = i + 1; j < 6; ++j) row += Rat(2) * m_(i, j) * v[j];
            acc += row * v[i];
        }
        return acc;
    }

    friend bool operator==(const SymMat6& a, const SymMat6& b) { return a.m_ == b.m_; }

private:
    RatMatrix m_;
};

/// Companion matrix of f/f6 acting on column vectors: subdiagonal ones, last column -f_i/f6.
inline RatMatrix companion_R(const SexticCurve& c) {
    RatMatrix r(6, 6, Rat());
    for (std::size_t i = 1; i < 6; ++i) r(i, i - 1) = Rat(1);
    for (std::size_t i = 0; i < 6; ++i) r(i, 5) = -c.coeff(i) / c.f6();
    return r;
}

/// Hankel matrix T[i][j] = f_{i+j+1}.
inline RatMatrix hankel_T(const SexticCurve& c) {
    RatMatrix t(6, 6, Rat());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; i + j + 1 <= 6; ++j) t(i, j) = c.coeff(i + j + 1);
    return t;
}

namespace detail {

inline std::array<RatMatrix, 11> companion_powers(const SexticCurve& c) {
    std::array<RatMatrix, 11> pw;
    pw[0] = RatMatrix::identity(6, Rat(), Rat(1));
    const auto r = companion_R(c);
    for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * r;
    return pw;
}

inline SymMat6 quadric_from_powers(const std::array<RatMatrix, 11>& pw, const RatMatrix& t, const SexticCurve& c,
                                   const Twist& tw, std::size_t j) {
    RatMatrix acc(6, 6, Rat());
    for (std::size_t i = 0; i < 6; ++i) {
        if (tw.d(i).is_zero()) continue;
        acc = acc + (c.f6() * tw.d(i)) * pw[i + j];
    }
    return SymMat6(acc * t);
}

} // namespace detail

/// The matrix sum_i f6 d_i R^(i+j) T, in the dual coordinates v_1..v_6 of the g-basis.
inline SymMat6 quadric_Q(const SexticCurve& c, const Twist& tw, std::size_t j) {
    if (j > 5) raise(errc::invariant_violation, "quadric index must be in 0..5");
    return detail::quadric_from_powers(detail::companion_powers(c), hankel_T(c), c, tw, j);
}

/// Coefficient of X^j in the reduced representative of delta * xi^2.
inline Rat form_C(const SexticCurve&, const Twist& tw, std::size_t j, const RatAlg& xi) {
    if (j > 5) raise(errc::invariant_violation, "form index must be in 0..5");
    return (tw.delta() * xi * xi)[j];
}

/// Twisted desingularized Kummer surface: Q0 = Q1 = Q2 = 0 in P(L); Q3..Q5 kept for the duplication map.
class KummerModel {
public:
    KummerModel(SexticCurve curve, Twist twist) : curve_(std::move(curve)), twist_(std::move(twist)) {
        const auto pw = detail::companion_powers(curve_);
        T_ = hankel_T(curve_);
        R_ = pw[1];
        for (std::size_t j = 0; j < 6; ++j) Q_.push_back(detail::quadric_from_powers(pw, T_, curve_, twist_, j));
        Tinv_ = anti_triangular_inverse(T_);
    }

    const SexticCurve& curve() const { return curve_; }
    const Twist& twist() const { return twist_; }
    const std::vector<SymMat6>& Q() const { return Q_; }
    const SymMat6& Q(std::size_t j) const { return Q_.at(j); }
    const RatMatrix& R() const { return R_; }
    const RatMatrix& T() const { return T_; }
    const RatMatrix& T_inverse() const { return Tinv_; }

    /// g-basis coordinates (v_1..v_6) of an element of L given in the power basis.
    std::vector<Rat> to_dual(const RatAlg& xi) const { return Tinv_.apply(std::span<const Rat>(xi.coeffs())); }
    /// Power-basis element sum v_i g_i.
    RatAlg from_dual(std::span<const Rat> v) const { return curve_.L()->element(T_.apply(v)); }

private:
    // T is zero below the antidiagonal with f6 on it; solve T x = e_k by back substitution from the bottom row.
    static RatMatrix anti_triangular_inverse(const RatMatrix& t) {
        RatMatrix inv(6, 6, Rat());
        const Rat f6 = t(0, 5);
        for (std::size_t k = 0; k < 6; ++k) {
            std::array<Rat, 6> x{};
            // row 5 fixes x_0, row 4 fixes x_1, ...
            for (std::size_t r = 6; r-- > 0;) {
                const std::size_t unknown = 5 - r;
                Rat s = r == k ? Rat(1) : Rat();
                for (std::size_t j = 0; j < unknown; ++j) s -= t(r, j) * x[j];
                x[unknown] = s / f6;
            }
            for (std::size_t i = 0; i < 6; ++i) inv(i, k) = x[i];
        }
        return inv;
    }

    SexticCurve curve_;
    Twist twist_;
    std::vector<SymMat6> Q_;
    RatMatrix R_, T_, Tinv_;
};

inline KummerModel kummer_model(const SexticCurve& c, const Twist& tw) { return KummerModel(c, tw); }

} // namespace g2desc
