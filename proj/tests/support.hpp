#pragma once

#include <random>
#include <vector>

#include <g2desc/io/fixtures.hpp>

namespace g2desc::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(0x67326465u);
    return r;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat small_rat(long bound = 9) {
    const long d = uniform(1, 4);
    return Rat(Int(uniform(-bound, bound)), Int(d));
}

inline RatPoly random_poly(int degree, long bound = 9, bool monic = false) {
    std::vector<Rat> c;
    for (int i = 0; i < degree; ++i) c.push_back(Rat(uniform(-bound, bound)));
    Rat lead;
    while (lead.is_zero()) lead = Rat(uniform(-bound, bound));
    c.push_back(monic ? Rat(1) : lead);
    return RatPoly(std::move(c));
}

/// f = (x - alpha) g with random integral g, squarefree; f6 is not forced to be 1.
inline SexticCurve random_curve(long bound = 6) {
    for (;;) {
        const Rat alpha(uniform(-3, 3));
        const RatPoly f = RatPoly::linear_root(alpha) * random_poly(5, bound);
        if (!discriminant(f).is_zero()) return SexticCurve::make(f, alpha);
    }
}

inline RatAlg random_element(const AlgebraPtr<Rat>& A, long bound = 5) {
    std::vector<Rat> c;
    for (std::size_t i = 0; i < A->dim(); ++i) c.push_back(Rat(uniform(-bound, bound)));
    return A->element(std::move(c));
}

inline Twist random_twist(const SexticCurve& c) {
    for (;;) {
        auto d = random_element(c.L(), 4);
        if (!d.is_zero() && alg_is_unit(d)) return Twist::make(c, d.coeffs());
    }
}

/// (curve, twist, model) for every bundled example.
struct FixtureModel {
    std::string label;
    std::string twist_name;
    Genus5Model model;
};

inline const std::vector<io::FixtureSet>& fixtures() {
    static const auto f = io::bundled_fixtures();
    return f;
}

inline std::vector<FixtureModel> fixture_models() {
    std::vector<FixtureModel> out;
    for (const auto& fx : fixtures()) {
        const auto c = fx.curve.curve();
        for (const auto& t : fx.twists) out.push_back({fx.curve.label, t.name, genus5_model(c, Twist::make(c, t.delta))});
    }
    return out;
}

inline const io::FixtureSet& fixture(const std::string& prefix) {
    for (const auto& fx : fixtures())
        if (fx.curve.label.starts_with(prefix)) return fx;
    raise(errc::malformed_input, "no fixture " + prefix);
}

inline Genus5Model fixture_model(const std::string& prefix, std::size_t twist) {
    const auto& fx = fixture(prefix);
    const auto c = fx.curve.curve();
    return genus5_model(c, Twist::make(c, fx.twists.at(twist - 1).delta));
}

} // namespace g2desc::testing
