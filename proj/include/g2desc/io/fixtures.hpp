#pragma once

// The worked examples bundled with the library, and a runner that replays them.

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <g2desc/fixture_data.hpp>

#include "../descent.hpp"
#include "../local/solvability.hpp"
#include "inputs.hpp"
#include "json.hpp"
#include "pack.hpp"
#include "text.hpp"

namespace g2desc::io {

struct CurveRecord {
    std::string label;
    std::optional<std::pair<BinaryForm, BinaryForm>> minimal_eq; ///< (q, r) in y^2 + q y = r
    RatPoly sextic;
    Rat alpha;
    CoordTransform transform;

    SexticCurve curve() const { return SexticCurve::make(sextic, alpha); }

    /// complete_square(minimal_eq) must reproduce sextic and transform.
    void validate() const {
        if (!minimal_eq) return;
        const auto cm = complete_square(minimal_eq->first, minimal_eq->second, transform.swap);
        if (!(cm.f == sextic)) raise(errc::invariant_violation, label + ": q^2 + 4r does not give the sextic model");
        if (!(cm.transform == transform)) raise(errc::invariant_violation, label + ": coordinate change does not match");
    }

    friend bool operator==(const CurveRecord& a, const CurveRecord& b) {
        auto eq_min = [](const auto& x, const auto& y) {
            if (x.has_value() != y.has_value()) return false;
            return !x || (x->first == y->first && x->second == y->second);
        };
        return a.label == b.label && eq_min(a.minimal_eq, b.minimal_eq) && a.sextic == b.sextic && a.alpha == b.alpha &&
               a.transform == b.transform;
    }
};

inline json to_json(const CurveRecord& c) {
    json j = document();
    j["label"] = c.label;
    if (c.minimal_eq) {
        j["minimal_eq"] = {{"q", to_json(c.minimal_eq->first)}, {"r", to_json(c.minimal_eq->second)}};
    } else {
        j["minimal_eq"] = nullptr;
    }
    j["sextic"] = to_json(c.sextic);
    j["alpha"] = to_json(c.alpha);
    j["transform"] = to_json(c.transform);
    return j;
}

inline CurveRecord curve_record_from_json(const json& j) {
    check_schema(j);
    CurveRecord c;
    c.label = field(j, "label").get<std::string>();
    if (j.contains("minimal_eq") && !j["minimal_eq"].is_null())
        c.minimal_eq = std::pair{binary_form_from_json(field(j["minimal_eq"], "q")), binary_form_from_json(field(j["minimal_eq"], "r"))};
    c.sextic = poly_from_json(field(j, "sextic"));
    c.alpha = rat_from_json(field(j, "alpha"));
    c.transform = transform_from_json(field(j, "transform"));
    c.validate();
    return c;
}

struct FixtureTwist {
    std::string name;
    std::string delta_text; ///< as printed in the source table
    std::vector<Rat> delta;
    std::optional<std::string> els; ///< "yes", "no (2)", or absent
};

struct FixtureSet {
    CurveRecord curve;
    std::vector<FixtureTwist> twists;
    std::vector<text::Evaluation> evaluations;
    std::vector<P1Point> expected_x_set;
    json provenance;

    /// Expected ELS outcome: "no (p)" is false at p; "yes", or a listed rational point, is true.
    std::optional<std::pair<bool, u64>> expected_els(std::size_t twist) const {
        const auto& t = twists.at(twist);
        if (t.els) {
            if (*t.els == "yes") return std::pair{true, u64(0)};
            static const std::regex no(R"(^no \((\d+)\)$)");
            std::smatch m;
            if (std::regex_match(*t.els, m, no)) return std::pair{false, static_cast<u64>(std::stoull(m[1].str()))};
            raise(errc::malformed_input, "bad ELS entry \"" + *t.els + "\"");
        }
        for (const auto& e : evaluations)
            if (e.twist == twist + 1) return std::pair{true, u64(0)};
        return std::nullopt;
    }
};

/// Reads a fixture file: every mathematical field is the verbatim printed string.
inline FixtureSet load_fixture(const json& j) {
    check_schema(j);
    FixtureSet fx;
    CurveRecord& c = fx.curve;
    c.label = field(j, "label").get<std::string>();
    c.minimal_eq = text::parse_minimal_equation(field(j, "minimal_equation").get<std::string>());
    c.sextic = text::dehomogenize(text::parse_sextic_model(field(j, "model").get<std::string>()));
    c.alpha = text::parse_weierstrass_x(field(j, "weierstrass_point").get<std::string>());
    static const std::regex change(R"(\\mapsto\s*\(\s*([xz])\s*:)");
    std::smatch m;
    const std::string cc = field(j, "change_of_coordinates").get<std::string>();
    if (!std::regex_search(cc, m, change)) raise(errc::malformed_input, "cannot read the change of coordinates");
    c.transform = {m[1].str() == "z", c.minimal_eq->first};
    c.validate();
    for (const auto& t : field(j, "twists")) {
        FixtureTwist ft;
        ft.name = field(t, "name").get<std::string>();
        ft.delta_text = field(t, "delta").get<std::string>();
        ft.delta = text::parse_poly(ft.delta_text).coeffs();
        if (!field(t, "els").is_null()) ft.els = t["els"].get<std::string>();
        fx.twists.push_back(std::move(ft));
    }
    for (const auto& e : field(j, "evaluations")) {
        fx.evaluations.push_back(text::parse_evaluation(e.get<std::string>()));
        if (fx.evaluations.back().twist < 1 || fx.evaluations.back().twist > fx.twists.size())
            raise(errc::malformed_input, "evaluation refers to a missing twist: " + e.get<std::string>());
    }
    fx.expected_x_set = text::parse_p1_set(field(j, "x_coordinates").get<std::string>());
    for (const auto& t : field(j, "twists")) {
        json p;
        for (const auto& [k, v] : t.items())
            if (k != "name" && k != "delta" && k != "els") p[k] = v;
        fx.provenance.push_back(p);
    }
    return fx;
}

inline std::vector<FixtureSet> bundled_fixtures() {
    std::vector<FixtureSet> out;
    for (const auto& [name, text] : fixture_data::files) out.push_back(load_fixture(json::parse(text)));
    return out;
}

struct FixtureCheck {
    std::string label;
    std::string check;
    bool ok = false;
    std::string detail;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;
    std::set<std::string> ops; ///< public operations exercised

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const FixtureCheck& c) { return !c.ok; }));
    }
};

struct FixtureOptions {
    bool els = true;
    std::vector<u64> els_primes; ///< empty: the full prime list
    SearchOptions search;
};

/// The public operations of every module, as named in the documentation.
inline const std::vector<std::string>& public_operations() {
    static const std::vector<std::string> ops = {
        "poly_div_exact", "alg_mul",      "alg_is_unit", "eval_hom",     "resultant_monic", "discriminant",
        "reduce_mod_p",   "companion_R",  "hankel_T",    "quadric_Q",    "form_C",          "kummer_model",
        "genus5_model",   "lift_point",   "is_on_curve", "dup_map",      "quartic_Y",       "genus1_model",
        "phi_map",        "fiber_system", "complete_square", "pullback_x", "prime_list",    "count_points_fp",
        "solvable_at_p",  "els_report",   "parse_inputs", "run_fixtures", "emit_chabauty_pack"};
    return ops;
}

namespace detail {

/// Smallest odd prime of good reduction for every twist.
inline u64 first_good_prime(const std::vector<Genus5Model>& ms) {
    for (u64 p = 3;; p += 2) {
        if (!is_prime(p)) continue;
        if (std::all_of(ms.begin(), ms.end(), [&](const Genus5Model& m) { return !bad_reduction_reason(m, p); })) return p;
    }
}

/// delta xi^2 = c (X - alpha)(X - r), or c (X - alpha) when r is infinity.
inline bool pipeline_consistent(const Genus5Model& m, const RatAlg& xi, const P1Point& r) {
    const RatAlg w = alg_mul(m.twist().delta(), xi * xi);
    const auto& L = m.curve().L();
    const RatPoly xa = RatPoly::linear_root(m.curve().alpha());
    const RatPoly target = r.is_infinity() ? xa : xa * RatPoly::linear_root(r.value());
    const RatPoly wp = w.poly();
    if (wp.is_zero() || wp.degree() != target.degree()) return false;
    const Rat c = wp.lead() / target.lead();
    return w == L->element(c * target);
}

template <class Roots>
bool unusable_for_fibers(const std::vector<Genus5Model>& ms, u64 p, Roots&& roots) {
    if (!is_prime(p)) return true;
    for (const auto& m : ms)
        if (bad_reduction_reason(m, p)) return true;
    return roots(p).empty();
}

} // namespace detail

inline FixtureReport run_fixtures(const FixtureOptions& opt = {}, const std::vector<FixtureSet>& sets = bundled_fixtures()) {
    FixtureReport rep;
    rep.ops.insert("run_fixtures");
    auto add = [&](const std::string& label, std::string check, bool ok, std::string detail = {}) {
        rep.checks.push_back({label, std::move(check), ok, std::move(detail)});
    };
    for (const auto& fx : sets) {
        const std::string& label = fx.curve.label;
        try {
            // minimal model -> sextic model
            const auto cm = complete_square(fx.curve.minimal_eq->first, fx.curve.minimal_eq->second);
            rep.ops.insert("complete_square");
            add(label, "complete_square reproduces the sextic model", cm.f == fx.curve.sextic && cm.transform == fx.curve.transform);

            // the curve and twists go through the same validating parser as user input
            json twist_doc = json::array();
            for (const auto& t : fx.twists) twist_doc.push_back(to_json(t.delta));
            json point_doc = json::array();
            for (const auto& e : fx.evaluations) point_doc.push_back(to_json(e.point));
            const Inputs in = parse_inputs(to_json(fx.curve.curve()), twist_doc, point_doc);
            rep.ops.insert("parse_inputs");
            const SexticCurve& curve = in.curve;
            add(label, "parsed inputs", in.twists.size() == fx.twists.size() && in.points.size() == fx.evaluations.size());
            rep.ops.insert("discriminant");
            add(label, "discriminant nonzero", !discriminant(curve.f()).is_zero(), curve.disc().to_string());
            add(label, "f(alpha) = 0", eval_hom(curve.f(), curve.alpha()).is_zero());
            rep.ops.insert("eval_hom");

            const RatMatrix R = companion_R(curve), T = hankel_T(curve);
            rep.ops.insert("companion_R");
            rep.ops.insert("hankel_T");
            {
                auto cp = charpoly_berkowitz(R, Rat(1));
                std::vector<Rat> asc(cp.rbegin(), cp.rend());
                add(label, "charpoly(R) = f/f6", RatPoly(asc) == curve.f6().inverse() * curve.f());
                bool row = T.is_symmetric();
                for (std::size_t k = 0; k < 6; ++k) row = row && T(0, k) == curve.coeff(k + 1);
                add(label, "T is Hankel with first row f1..f6", row);
            }

            std::vector<Twist> twists;
            std::vector<Genus5Model> models;
            std::vector<Genus1Model> g1s;
            for (const auto& t : fx.twists) {
                twists.push_back(in.twists[twists.size()]);
                if (!(twists.back().delta().coeffs() == Twist::make(curve, t.delta).delta().coeffs()))
                    add(label, t.name + " parsed", false);
                add(label, t.name + " is a unit", alg_is_unit(twists.back().delta()).has_value(), t.delta_text);
                rep.ops.insert("alg_is_unit");
                models.push_back(genus5_model(curve, twists.back()));
                g1s.push_back(genus1_model(curve, twists.back()));
            }
            rep.ops.insert("genus5_model");
            rep.ops.insert("genus1_model");

            {
                const auto q = poly_div_exact(curve.f(), RatPoly::linear_root(curve.alpha()));
                rep.ops.insert("poly_div_exact");
                bool ok = true;
                const auto g = g_basis_values(coefficient_array(curve), curve.alpha());
                for (std::size_t i = 0; i < 6; ++i) ok = ok && models[0].gamma()[i] == q.coeff(i, Rat()) && g[i] == q.coeff(i, Rat());
                add(label, "gamma_i = g_i(alpha) = coefficients of f/(x - alpha)", ok);
            }

            for (std::size_t i = 0; i < twists.size(); ++i) {
                const auto km = kummer_model(curve, twists[i]);
                rep.ops.insert("kummer_model");
                bool ok = true;
                for (std::size_t j = 0; j < 6; ++j) ok = ok && quadric_Q(curve, twists[i], j).matrix() == km.Q(j).matrix();
                rep.ops.insert("quadric_Q");
                add(label, fx.twists[i].name + " quadrics symmetric", ok && std::all_of(km.Q().begin(), km.Q().end(), [](const SymMat6& s) { return s.matrix().is_symmetric(); }));
                const RatAlg Y = quartic_Y(g1s[i], twists[i].delta());
                rep.ops.insert("quartic_Y");
                rep.ops.insert("resultant_monic");
                add(label, fx.twists[i].name + " Ydelta = Y(delta)", Y == g1s[i].Ydelta());
            }

            // displayed evaluations
            std::set<std::pair<Int, Int>> images;
            std::vector<P1Point> image_list;
            for (const auto& e : fx.evaluations) {
                const std::size_t i = e.twist - 1;
                const auto& m = models[i];
                std::string where = fx.twists[i].name + " " + text::trim("(" + e.point[0].to_string() + " : " + e.point[1].to_string() + " : " +
                                                                         e.point[2].to_string() + " : " + e.point[3].to_string() + " : " +
                                                                         e.point[4].to_string() + ")");
                const bool on = is_on_curve(m, e.point);
                rep.ops.insert("is_on_curve");
                const RatAlg xi = lift_point(m, e.point);
                rep.ops.insert("lift_point");
                const bool hyper = eval_hom(xi, curve.alpha()).is_zero();
                add(label, "membership " + where, on && hyper);
                if (!on) continue;
                const P1Point got = dup_map(m, e.point);
                rep.ops.insert("dup_map");
                add(label, "pi_bar " + where, got == e.value, "got " + got.to_string() + ", expected " + e.value.to_string());
                bool c_ok = true;
                std::array<Rat, 6> C;
                for (std::size_t j = 0; j < 6; ++j) C[j] = form_C(curve, twists[i], j, xi);
                rep.ops.insert("form_C");
                for (std::size_t j = 3; j < 6; ++j) c_ok = c_ok && C[j].is_zero();
                const auto v = m.dual_coords(e.point);
                for (std::size_t j = 0; j < 6; ++j) {
                    Rat s;
                    for (std::size_t k = 0; k < 6; ++k) s += m.kummer().Q(k).eval(v) * T(k, j);
                    c_ok = c_ok && curve.f6() * C[j] == s;
                }
                add(label, "C3 = C4 = C5 = 0 and f6 C = Q T " + where, c_ok);
                add(label, "delta xi^2 = c (X - alpha)(X - r) " + where, detail::pipeline_consistent(m, xi, got));
                rep.ops.insert("alg_mul");
                const WeightedPoint w = phi_map(m, g1s[i], e.point);
                rep.ops.insert("phi_map");
                add(label, "phi(P) on D " + where, on_D(g1s[i], w));
                add(label, "commuting triangle " + where, P1Point::from_coords(w.u, w.v) == got);
                const P1Point back = pullback_x(fx.curve.transform, got);
                rep.ops.insert("pullback_x");
                if (images.insert({back.num(), back.den()}).second) image_list.push_back(back);
            }
            {
                std::set<std::pair<Int, Int>> expect;
                for (const auto& t : fx.expected_x_set) expect.insert({t.num(), t.den()});
                std::string got;
                for (const auto& t : image_list) got += (got.empty() ? "" : ", ") + t.to_string();
                add(label, "x-coordinate set", images == expect, "{" + got + "}");
            }

            // reduction mod the first good prime
            const u64 p = detail::first_good_prime(models);
            for (std::size_t i = 0; i < models.size(); ++i) {
                const u64 n = count_points_fp(models[i], p, opt.search.threads);
                rep.ops.insert("count_points_fp");
                const auto r = reduced_model(models[i], p);
                bool ok = n > 0 || fx.expected_els(i) == std::pair{false, u64(2)};
                for (const auto& e : fx.evaluations) {
                    if (e.twist != i + 1) continue;
                    // scale the dual coordinates to a primitive integral vector before reducing
                    const auto v = models[i].dual_coords(e.point);
                    Int den = 1, g = 0;
                    for (const auto& x : v) den = lcm(den, x.den());
                    for (const auto& x : v) g = gcd(g, x.num() * (den / x.den()));
                    std::array<FpElem, 6> vp;
                    for (std::size_t k = 0; k < 6; ++k) vp[k] = reduce_mod_p(v[k] * Rat(den) / Rat(g), p);
                    rep.ops.insert("reduce_mod_p");
                    for (std::size_t j = 0; j < 3; ++j) ok = ok && eval_form(r.Q[j], vp).is_zero();
                }
                add(label, fx.twists[i].name + " #Z(F_" + std::to_string(p) + ") = " + std::to_string(n) + " contains the reduced fixture points", ok);
            }
            {
                // fibers over the roots of g mod the first good prime where g has one
                auto roots_of_g = [&](u64 q) {
                    std::vector<u64> rs;
                    const auto g = reduce_mod_p(models[0].g(), q);
                    for (u64 w = 0; w < q; ++w)
                        if (eval_hom(g, FpElem(w, q)).is_zero()) rs.push_back(w);
                    return rs;
                };
                u64 pf = p;
                while (detail::unusable_for_fibers(models, pf, roots_of_g)) pf += 2;
                bool ok = true;
                std::string counts;
                const u64 p = pf;
                for (u64 w : roots_of_g(p)) {
                    for (const auto& m : models) {
                        const auto fs = fiber_system(m, FpElem(w, p));
                        rep.ops.insert("fiber_system");
                        const auto fr = reduced_fiber_model(m, FpElem(w, p));
                        ok = ok && fr.hyperplanes[1] == fs.linear_forms[1];
                        const u64 n = count_projective(fr.forms, opt.search.threads);
                        counts += (counts.empty() ? "" : " ") + std::to_string(n);
                        ok = ok && n <= 8;
                    }
                }
                add(label, "fibers over roots of g mod " + std::to_string(p) + " have <= 8 points", ok, counts);
            }

            {
                const auto primes = prime_list(curve);
                rep.ops.insert("prime_list");
                add(label, "prime list starts at 2 and covers the odd primes up to 97",
                    !primes.empty() && primes.front() == 2 && std::count_if(primes.begin(), primes.end(), [](const Int& q) { return q <= 97; }) == 25);
            }

            if (opt.els) {
                for (std::size_t i = 0; i < models.size(); ++i) {
                    const auto expect = fx.expected_els(i);
                    const auto er = els_report(models[i], opt.search, label, opt.els_primes);
                    rep.ops.insert("els_report");
                    rep.ops.insert("solvable_at_p");
                    std::string detail = "overall " + er.overall;
                    for (const auto& v : er.verdicts)
                        if (v.status != Status::solvable)
                            detail += "; " + std::to_string(v.prime) + " " + to_string(v.status) + " at depth " + std::to_string(v.depth);
                    bool ok = true;
                    if (expect) {
                        if (expect->first) {
                            ok = er.overall == "true";
                        } else {
                            ok = er.overall == "false";
                            for (const auto& v : er.verdicts)
                                if (v.prime == expect->second) ok = ok && v.status == Status::empty;
                        }
                    }
                    add(label, fx.twists[i].name + " ELS " + fx.twists[i].els.value_or("(has a rational point)"), ok, detail);
                }
            }

            {
                const json pack = emit_chabauty_pack(curve, twists, label);
                rep.ops.insert("emit_chabauty_pack");
                add(label, "Chabauty pack: one modulus, one section per twist",
                    pack["twists"].size() == twists.size() && pack["B"]["modulus"] == to_json(models[0].g()));
            }
        } catch (const std::exception& ex) {
            add(label, "exception", false, ex.what());
        }
    }
    return rep;
}

} // namespace g2desc::io
