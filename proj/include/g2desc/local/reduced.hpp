#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "../descent.hpp"
#include "primes.hpp"
#include "scan.hpp"

namespace g2desc {

/// Z_delta (or a fiber of pi-bar) mod p, written in coordinates y of the kernel of the hyperplanes.
struct ReducedModel {
    u64 p = 0;
    std::array<Matrix<FpElem>, 6> Q;
    std::vector<std::array<FpElem, 6>> hyperplanes;
    Matrix<FpElem> basis; ///< 6 x d; v = basis * y
    FormSystem forms;     ///< Q0, Q1, Q2 restricted to the kernel

    std::size_t dim() const { return basis.cols(); }

    std::array<FpElem, 6> lift(const std::vector<u64>& y) const {
        std::array<FpElem, 6> v;
        for (std::size_t i = 0; i < 6; ++i) {
            FpElem s(0, p);
            for (std::size_t k = 0; k < y.size(); ++k) s += basis(i, k) * FpElem(y[k], p);
            v[i] = s;
        }
        return v;
    }
};

inline FpElem eval_form(const Matrix<FpElem>& m, const std::array<FpElem, 6>& v) {
    FpElem s(0, m(0, 0).modulus());
    for (std::size_t a = 0; a < 6; ++a) {
        if (v[a].is_zero()) continue;
        FpElem row(0, s.modulus());
        for (std::size_t b = 0; b < 6; ++b) row += m(a, b) * v[b];
        s += row * v[a];
    }
    return s;
}

namespace detail {

inline ReducedModel make_reduced(const Genus5Model& m, u64 p, std::vector<std::array<FpElem, 6>> hyperplanes) {
    ReducedModel r;
    r.p = p;
    for (std::size_t j = 0; j < 6; ++j) r.Q[j] = reduce_mod_p(m.kummer().Q(j).matrix(), p);
    std::vector<std::vector<FpElem>> rows;
    for (const auto& h : hyperplanes) rows.emplace_back(h.begin(), h.end());
    r.hyperplanes = std::move(hyperplanes);
    r.basis = kernel_basis(std::move(rows), 6, p);
    std::vector<Matrix<FpElem>> restricted;
    for (std::size_t j = 0; j < 3; ++j) restricted.push_back(restrict_form(r.Q[j], r.basis));
    r.forms = to_form_system(restricted, p);
    return r;
}

} // namespace detail

inline ReducedModel reduced_model(const Genus5Model& m, u64 p) {
    std::array<FpElem, 6> g;
    for (std::size_t i = 0; i < 6; ++i) g[i] = reduce_mod_p(m.gamma()[i], p);
    return detail::make_reduced(m, p, {g});
}

/// The fiber of pi-bar over a root omega of g mod p, cut out by ev_alpha and ev_omega.
inline ReducedModel reduced_fiber_model(const Genus5Model& m, const FpElem& omega) {
    const auto fs = fiber_system(m, omega);
    return detail::make_reduced(m, omega.modulus(), {fs.linear_forms[0], fs.linear_forms[1]});
}

/// Why p is a bad prime for (curve, twist), or nullopt when reduction is good.
inline std::optional<std::string> bad_reduction_reason(const Genus5Model& m, u64 p) {
    if (p == 2) return "p = 2";
    if (!is_prime(p)) return "p is not prime";
    const auto& c = m.curve();
    const Int P(static_cast<unsigned long>(p));
    auto divides = [&](const Int& n) { return n != 0 && mpz_divisible_p(n.get_mpz_t(), P.get_mpz_t()); };
    const Rat df = c.disc() * c.f6();
    if (divides(df.num()) || divides(df.den())) return "p divides disc(f) f6";
    if (divides(common_denominator(c.f().coeffs()))) return "p divides a denominator of f";
    if (divides(common_denominator(m.twist().delta().coeffs()))) return "p divides a denominator of delta";
    const Rat n = twist_norm(c, m.twist());
    if (divides(n.num())) return "delta is not a unit mod p";
    return std::nullopt;
}

/// #Z_delta(F_p) for an odd prime of good reduction.
inline u64 count_points_fp(const Genus5Model& m, u64 p, unsigned threads = default_threads()) {
    if (auto why = bad_reduction_reason(m, p)) raise(errc::bad_reduction, "bad reduction at " + std::to_string(p) + ": " + *why);
    return count_projective(reduced_model(m, p).forms, threads);
}

/// pi-bar of a point of the reduced model, as t in [0, p) or p for infinity.
inline u64 pi_bar_mod_p(const Genus5Model& m, const ReducedModel& r, const std::vector<u64>& y) {
    const u64 p = r.p;
    const auto v = r.lift(y);
    const auto& c = m.curve();
    const FpElem f6 = reduce_mod_p(c.f6(), p);
    const FpElem shift = reduce_mod_p(c.coeff(5) + c.f6() * c.alpha(), p);
    const FpElem q3 = eval_form(r.Q[3], v), q4 = eval_form(r.Q[4], v);
    const FpElem num = -(shift * q3) - f6 * q4, den = f6 * q3;
    if (den.is_zero()) {
        if (num.is_zero()) raise(errc::indeterminate, "pi-bar indeterminate mod p");
        return p;
    }
    return (num / den).value();
}

/// Rank of the Jacobian of Q0, Q1, Q2 (in kernel coordinates) at y.
inline std::size_t jacobian_rank(const ReducedModel& r, const std::vector<u64>& y) {
    const std::size_t d = r.dim();
    Matrix<FpElem> J(r.forms.m.size(), d, FpElem(0, r.p));
    for (std::size_t j = 0; j < r.forms.m.size(); ++j)
        for (std::size_t a = 0; a < d; ++a) {
            u64 s = 0;
            for (std::size_t b = 0; b < d; ++b) s = (s + mulmod(r.forms.entry(j, a, b), y[b], r.p)) % r.p;
            J(j, a) = FpElem(2 * s % r.p, r.p);
        }
    return rank_mod_p(J);
}

} // namespace g2desc
