#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arith/algebra.hpp"
#include "arith/fp.hpp"
#include "arith/reduce.hpp"
#include "arith/resultant.hpp"
#include "kummer.hpp"

namespace g2desc {

/// (g_1(t), ..., g_6(t)) with g_i = f_i + f_{i+1} X + ... + f_6 X^(6-i).
template <class R>
std::array<R, 6> g_basis_values(const std::array<R, 7>& f, const R& t) {
    std::array<R, 6> out;
    for (std::size_t i = 1; i <= 6; ++i) {
        R acc = zero_like(t);
        for (std::size_t m = 6; m >= i; --m) acc = acc * t + f[m];
        out[i - 1] = acc;
    }
    return out;
}

inline std::array<Rat, 7> coefficient_array(const SexticCurve& c) {
    std::array<Rat, 7> f;
    for (std::size_t i = 0; i < 7; ++i) f[i] = c.coeff(i);
    return f;
}

/// Point (v_1 : ... : v_5) of Z_delta in P^4; v_6 is recovered from the hyperplane.
class ProjPoint4 {
public:
    explicit ProjPoint4(std::array<Rat, 5> v) : v_(std::move(v)) {
        for (const auto& x : v_)
            if (!x.is_zero()) return;
        raise(errc::zero_point, "all coordinates vanish");
    }
    const std::array<Rat, 5>& coords() const { return v_; }
    const Rat& operator[](std::size_t i) const { return v_[i]; }

    /// Equality up to a nonzero rational scalar.
    friend bool operator==(const ProjPoint4& a, const ProjPoint4& b) {
        std::size_t k = 0;
        while (a.v_[k].is_zero()) ++k;
        if (b.v_[k].is_zero()) return false;
        const Rat s = b.v_[k] / a.v_[k];
        for (std::size_t i = 0; i < 5; ++i)
            if (!(a.v_[i] * s == b.v_[i])) return false;
        return true;
    }

private:
    std::array<Rat, 5> v_;
};

/// Rational point of P^1 in canonical form: coprime (num, den), den > 0, or (1 : 0) for infinity.
class P1Point {
public:
    static P1Point infinity() { return P1Point(Int(1), Int(0)); }
    static P1Point from_rat(const Rat& r) { return P1Point(r.num(), r.den()); }
    /// (x : y); Indeterminate when both vanish.
    static P1Point from_coords(const Rat& x, const Rat& y) {
        if (y.is_zero()) {
            if (x.is_zero()) raise(errc::indeterminate, "both P^1 coordinates vanish");
            return infinity();
        }
        return from_rat(x / y);
    }
    static P1Point parse(const std::string& s) {
        if (s == "inf" || s == "\\infty" || s == "∞") return infinity();
        return from_rat(Rat::parse(s));
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }
    Rat value() const {
        if (is_infinity()) raise(errc::invariant_violation, "value of the point at infinity");
        return Rat(num_, den_);
    }
    std::string to_string() const { return is_infinity() ? "inf" : value().to_string(); }

    friend bool operator==(const P1Point& a, const P1Point& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(const P1Point& a, const P1Point& b) {
        if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
        return a.value() < b.value();
    }

private:
    P1Point(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}
    Int num_, den_;
};

/// Z_delta: the Kummer model cut by gamma_1 v_1 + ... + gamma_6 v_6 = 0.
class Genus5Model {
public:
    explicit Genus5Model(KummerModel k) : k_(std::move(k)) {
        const auto& c = k_.curve();
        auto q = poly_div_exact(c.f(), RatPoly::linear_root(c.alpha()));
        for (std::size_t i = 0; i < 6; ++i) gamma_[i] = q.coeff(i, Rat());
        g_ = std::move(q);
    }

    const KummerModel& kummer() const { return k_; }
    const SexticCurve& curve() const { return k_.curve(); }
    const Twist& twist() const { return k_.twist(); }
    /// gamma_i = coefficients of f/(x - alpha), ascending.
    const std::array<Rat, 6>& gamma() const { return gamma_; }
    /// g = f/(x - alpha)
    const RatPoly& g() const { return g_; }

    /// (v_1, ..., v_6) with v_6 = -(gamma_1 v_1 + ... + gamma_5 v_5)/gamma_6.
    std::array<Rat, 6> dual_coords(const ProjPoint4& P) const {
        std::array<Rat, 6> v;
        Rat s;
        for (std::size_t i = 0; i < 5; ++i) {
            v[i] = P[i];
            s += gamma_[i] * P[i];
        }
        v[5] = -s / gamma_[5];
        return v;
    }

private:
    KummerModel k_;
    std::array<Rat, 6> gamma_;
    RatPoly g_;
};

inline Genus5Model genus5_model(const SexticCurve& c, const Twist& tw) { return Genus5Model(KummerModel(c, tw)); }

/// Element of L (power basis) lifting P.
inline RatAlg lift_point(const Genus5Model& m, const ProjPoint4& P) {
    const auto v = m.dual_coords(P);
    return m.kummer().from_dual(v);
}

inline bool is_on_curve(const Genus5Model& m, const ProjPoint4& P) {
    const auto v = m.dual_coords(P);
    for (std::size_t j = 0; j < 3; ++j)
        if (!m.kummer().Q(j).eval(v).is_zero()) return false;
    return true;
}

/// Unreduced coordinates (-(f5 + f6 alpha) Q3 - f6 Q4 : f6 Q3) of the twisted duplication map.
struct DupCoords {
    Rat num, den;
};

inline DupCoords dup_coords(const Genus5Model& m, const ProjPoint4& P) {
    if (!is_on_curve(m, P)) raise(errc::not_on_curve, "point does not satisfy Q0 = Q1 = Q2 = 0");
    const auto v = m.dual_coords(P);
    const auto& c = m.curve();
    const Rat q3 = m.kummer().Q(3).eval(v);
    const Rat q4 = m.kummer().Q(4).eval(v);
    return {-(c.coeff(5) + c.f6() * c.alpha()) * q3 - c.f6() * q4, c.f6() * q3};
}

inline P1Point dup_map(const Genus5Model& m, const ProjPoint4& P) {
    auto d = dup_coords(m, P);
    return P1Point::from_coords(d.num, d.den);
}

// ---------------------------------------------------------------------------
// Genus-one quotient over B = Q[w]/<g(w)>

using BPoly = UniPoly<RatAlg>;

/// D: Ydelta * y^2 = h(alpha) * H(x, z) over B, where (x - w) h(x) = g(x).
class Genus1Model {
public:
    Genus1Model(AlgebraPtr<Rat> B, RatPoly g, BPoly h, Rat f6)
        : B_(std::move(B)), g_(std::move(g)), h_(std::move(h)), f6_(std::move(f6)),
          Y_(B_->constant(Rat(1))), h_alpha_(B_->constant(Rat())) {}

    const AlgebraPtr<Rat>& B() const { return B_; }
    const RatPoly& g() const { return g_; }
    const BPoly& h() const { return h_; }
    const Rat& f6() const { return f6_; }
    const RatAlg& Ydelta() const { return Y_; }
    const RatAlg& h_alpha() const { return h_alpha_; }
    /// Coefficients h_0..h_4 of H(x, z) = sum h_i x^i z^(4-i).
    std::vector<RatAlg> H() const {
        std::vector<RatAlg> out;
        for (std::size_t i = 0; i < 5; ++i) out.push_back(h_.coeff(i, B_->constant(Rat())));
        return out;
    }
    RatAlg H_at(const Rat& u, const Rat& v) const { return eval_binary(h_, 4, u, v, B_->constant(Rat())); }

    void set_twist_data(RatAlg Ydelta, RatAlg h_alpha) {
        Y_ = std::move(Ydelta);
        h_alpha_ = std::move(h_alpha);
    }

private:
    AlgebraPtr<Rat> B_;
    RatPoly g_;
    BPoly h_;
    Rat f6_;
    RatAlg Y_, h_alpha_;
};

/// Y(xi) = prod_j xi(beta_j) over the roots of h, as resultant_monic(h/f6, xi, 5) over B.
inline RatAlg quartic_Y(const Genus1Model& g1, const RatAlg& xi) {
    const auto& B = g1.B();
    const RatAlg one = B->constant(Rat(1));
    const Rat inv6 = g1.f6().inverse();
    std::vector<RatAlg> a;
    for (const auto& c : g1.h().coeffs()) a.push_back(c * inv6);
    std::vector<RatAlg> b;
    for (const auto& c : xi.coeffs()) b.push_back(B->constant(c));
    return resultant_monic(BPoly(std::move(a)), BPoly(std::move(b)), 5, one);
}

inline Genus1Model genus1_model(const SexticCurve& c, const Twist& tw) {
    RatPoly g = poly_div_exact(c.f(), RatPoly::linear_root(c.alpha()));
    auto B = QuotAlgebra<Rat>::make(g);
    const RatAlg one = B->constant(Rat(1));
    std::vector<RatAlg> gb;
    for (const auto& x : g.coeffs()) gb.push_back(B->constant(x));
    BPoly x_minus_w(std::vector<RatAlg>{-B->generator(), one});
    BPoly h = poly_div_exact(BPoly(std::move(gb)), x_minus_w, std::optional<RatAlg>(one));
    Genus1Model m(B, g, h, c.f6());
    const RatAlg h_alpha = eval_hom(h, B->constant(c.alpha()));
    m.set_twist_data(quartic_Y(m, tw.delta()), h_alpha);
    return m;
}

/// Point (u : s : v) of P(1, 2, 1) over B with u, v rational.
struct WeightedPoint {
    Rat u;
    RatAlg s;
    Rat v;

    /// Same point up to (u, s, v) ~ (l u, l^2 s, l v).
    friend bool weighted_equivalent(const WeightedPoint& a, const WeightedPoint& b) {
        Rat l;
        if (!a.u.is_zero()) {
            l = b.u / a.u;
        } else if (!a.v.is_zero()) {
            l = b.v / a.v;
        } else {
            return false;
        }
        if (l.is_zero()) return false;
        return b.u == l * a.u && b.v == l * a.v && b.s == (l * l) * a.s;
    }
};

inline bool on_D(const Genus1Model& g1, const WeightedPoint& w) {
    return g1.Ydelta() * w.s * w.s == g1.h_alpha() * g1.H_at(w.u, w.v);
}

inline WeightedPoint phi_map(const Genus5Model& m, const Genus1Model& g1, const ProjPoint4& P) {
    auto d = dup_coords(m, P);
    const Rat f6 = m.curve().f6();
    RatAlg s = quartic_Y(g1, lift_point(m, P)) * (f6 * f6 * f6);
    return {std::move(d.num), std::move(s), std::move(d.den)};
}

// ---------------------------------------------------------------------------
// Fibers over branch points: Z_delta intersected with ker(ev_omega).

template <class R>
struct FiberSystem {
    std::array<Matrix<R>, 3> quadrics;
    /// ev_alpha and ev_omega in dual-v coordinates.
    std::array<std::array<R, 6>, 2> linear_forms;
};

inline FiberSystem<Rat> fiber_system(const Genus5Model& m, const Rat& omega) {
    const auto& c = m.curve();
    if (omega == c.alpha()) raise(errc::omega_equals_alpha, "omega must differ from alpha");
    if (!eval_hom(c.f(), omega).is_zero()) raise(errc::omega_not_root, "omega is not a root of f");
    const auto f = coefficient_array(c);
    FiberSystem<Rat> fs{{m.kummer().Q(0).matrix(), m.kummer().Q(1).matrix(), m.kummer().Q(2).matrix()},
                        {m.gamma(), g_basis_values(f, omega)}};
    return fs;
}

inline FiberSystem<FpElem> fiber_system(const Genus5Model& m, const FpElem& omega) {
    const u64 p = omega.modulus();
    const auto& c = m.curve();
    std::array<FpElem, 7> f;
    for (std::size_t i = 0; i < 7; ++i) f[i] = reduce_mod_p(c.coeff(i), p);
    const FpElem alpha = reduce_mod_p(c.alpha(), p);
    if (omega == alpha) raise(errc::omega_equals_alpha, "omega must differ from alpha mod p");
    FpElem fw = FpElem(0, p);
    for (std::size_t i = 7; i-- > 0;) fw = fw * omega + f[i];
    if (!fw.is_zero()) raise(errc::omega_not_root, "omega is not a root of f mod p");
    FiberSystem<FpElem> fs{{reduce_mod_p(m.kummer().Q(0).matrix(), p), reduce_mod_p(m.kummer().Q(1).matrix(), p),
                            reduce_mod_p(m.kummer().Q(2).matrix(), p)},
                           {g_basis_values(f, alpha), g_basis_values(f, omega)}};
    return fs;
}

// ---------------------------------------------------------------------------
// Sextic models from minimal equations y^2 + q y = r.

/// Binary form sum c_i x^i z^(deg - i).
struct BinaryForm {
    int degree = 0;
    std::vector<Rat> c;

    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : Rat(); }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree != b.degree) return false;
        for (int i = 0; i <= a.degree; ++i)
            if (!(a.coeff(i) == b.coeff(i))) return false;
        return true;
    }
};

/// Records the substitution y -> (y' - q)/2 and an optional x <-> z swap.
struct CoordTransform {
    bool swap = false;
    BinaryForm q;
    friend bool operator==(const CoordTransform&, const CoordTransform&) = default;
};

struct CompletedModel {
    RatPoly f;
    CoordTransform transform;
};

/// q^2 + 4 r, swapped x <-> z when requested or (by default) when the x^6 coefficient vanishes.
inline CompletedModel complete_square(const BinaryForm& q, const BinaryForm& r, std::optional<bool> swap = std::nullopt) {
    if (2 * q.degree != r.degree || r.degree != 6) raise(errc::not_degree_six, "expected a binary cubic q and sextic r");
    std::vector<Rat> F(7);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) F[static_cast<std::size_t>(i + j)] += q.coeff(i) * q.coeff(j);
    for (int i = 0; i <= 6; ++i) F[static_cast<std::size_t>(i)] += Rat(4) * r.coeff(i);
    const bool do_swap = swap.value_or(F[6].is_zero());
    if (do_swap) std::reverse(F.begin(), F.end());
    RatPoly f(std::move(F));
    if (f.degree() != 6) raise(errc::not_degree_six, "q^2 + 4r has degree below 6 in x");
    if (discriminant(f).is_zero()) raise(errc::not_squarefree, "q^2 + 4r is not squarefree");
    return {std::move(f), CoordTransform{do_swap, q}};
}

/// Maps an x-coordinate on the sextic model back to the minimal model.
inline P1Point pullback_x(const CoordTransform& t, const P1Point& x) {
    if (!t.swap) return x;
    if (x.is_infinity()) return P1Point::from_rat(Rat());
    if (x.num() == 0) return P1Point::infinity();
    return P1Point::from_rat(x.value().inverse());
}

} // namespace g2desc
