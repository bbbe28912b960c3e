#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "../descent.hpp"
#include "../local/solvability.hpp"
#include "text.hpp"

namespace g2desc::io {

using json = nlohmann::ordered_json;

inline constexpr const char* schema = "g2desc/1";

inline json document() {
    json j;
    j["schema"] = schema;
    return j;
}

inline void check_schema(const json& j) {
    if (!j.is_object()) raise(errc::malformed_input, "expected a JSON object");
    if (j.contains("schema") && j["schema"] != schema)
        raise(errc::malformed_input, "unsupported schema " + j["schema"].dump());
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) raise(errc::malformed_input, std::string("missing field \"") + key + "\"");
    return j[key];
}

// --- scalars and vectors -------------------------------------------------

inline json to_json(const Rat& r) { return r.to_string(); }

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) raise(errc::malformed_input, "rational must be a string \"n\" or \"n/d\": " + j.dump());
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const error&) {
        raise(errc::malformed_input, "bad rational " + j.dump());
    }
}

inline json to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline std::vector<Rat> rats_from_json(const json& j) {
    if (!j.is_array()) raise(errc::malformed_input, "expected an array of rationals");
    std::vector<Rat> v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

inline json to_json(const RatPoly& p) { return to_json(p.coeffs()); }

/// Polynomials are arrays (ascending) or strings such as "X^2 + X - 1".
inline RatPoly poly_from_json(const json& j) {
    if (j.is_string()) return text::parse_poly(j.get<std::string>());
    return RatPoly(rats_from_json(j));
}

inline json to_json(const RatAlg& a) { return to_json(a.coeffs()); }

inline RatAlg alg_from_json(const json& j, const AlgebraPtr<Rat>& parent) {
    auto p = poly_from_json(j);
    if (p.degree() >= static_cast<int>(parent->dim())) raise(errc::malformed_input, "algebra element of too high degree");
    return parent->element(p);
}

inline json to_json(const RatMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        a.push_back(row);
    }
    return a;
}

inline RatMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) raise(errc::malformed_input, "expected a nonempty matrix");
    RatMatrix m(j.size(), j[0].size(), Rat());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) raise(errc::malformed_input, "ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rat_from_json(j[i][k]);
    }
    return m;
}

inline json to_json(const SymMat6& m) { return to_json(m.matrix()); }
inline SymMat6 symmat_from_json(const json& j) { return SymMat6(matrix_from_json(j)); }

inline json to_json(const Int& n) { return n.get_str(); }

// --- curves and twists ---------------------------------------------------

inline json to_json(const SexticCurve& c) {
    json j = document();
    j["f"] = to_json(c.f());
    j["alpha"] = to_json(c.alpha());
    return j;
}

inline SexticCurve curve_from_json(const json& j) {
    check_schema(j);
    return SexticCurve::make(poly_from_json(field(j, "f")), rat_from_json(field(j, "alpha")));
}

inline json to_json(const Twist& t) {
    json j = document();
    j["delta"] = to_json(t.delta());
    return j;
}

inline Twist twist_from_json(const json& j, const SexticCurve& c) {
    check_schema(j);
    return Twist::make(c, poly_from_json(field(j, "delta")).coeffs());
}

// --- points --------------------------------------------------------------

inline json to_json(const ProjPoint4& P) {
    json a = json::array();
    for (const auto& x : P.coords()) a.push_back(to_json(x));
    return a;
}

/// Arrays of five rationals or strings "(v1 : ... : v5)".
inline ProjPoint4 point_from_json(const json& j) {
    if (j.is_string()) return text::parse_point4(j.get<std::string>());
    auto v = rats_from_json(j);
    if (v.size() != 5) raise(errc::malformed_input, "a point needs five coordinates");
    return ProjPoint4({v[0], v[1], v[2], v[3], v[4]});
}

inline std::vector<ProjPoint4> points_from_json(const json& j) {
    const json& a = j.is_object() ? (check_schema(j), field(j, "points")) : j;
    if (!a.is_array()) raise(errc::malformed_input, "expected a list of points");
    std::vector<ProjPoint4> out;
    for (const auto& x : a) out.push_back(point_from_json(x));
    return out;
}

inline json to_json(const P1Point& t) { return t.to_string(); }
inline P1Point p1_from_json(const json& j) {
    if (!j.is_string()) raise(errc::malformed_input, "P^1 point must be a string");
    return text::parse_p1(j.get<std::string>());
}

// --- binary forms and transforms ----------------------------------------

inline json to_json(const BinaryForm& b) {
    json j;
    j["degree"] = b.degree;
    j["c"] = to_json(b.c);
    return j;
}

inline BinaryForm binary_form_from_json(const json& j) {
    BinaryForm b{field(j, "degree").get<int>(), rats_from_json(field(j, "c"))};
    if (b.degree < 0 || b.c.size() != static_cast<std::size_t>(b.degree + 1)) raise(errc::malformed_input, "binary form needs degree + 1 coefficients");
    return b;
}

inline json to_json(const CoordTransform& t) {
    json j;
    j["swap"] = t.swap;
    j["q"] = to_json(t.q);
    return j;
}

inline CoordTransform transform_from_json(const json& j) {
    return {field(j, "swap").get<bool>(), binary_form_from_json(field(j, "q"))};
}

// --- genus-one layer -----------------------------------------------------

inline json to_json(const WeightedPoint& w) {
    json j;
    j["u"] = to_json(w.u);
    j["s"] = to_json(w.s);
    j["v"] = to_json(w.v);
    return j;
}

inline WeightedPoint weighted_from_json(const json& j, const AlgebraPtr<Rat>& B) {
    return {rat_from_json(field(j, "u")), alg_from_json(field(j, "s"), B), rat_from_json(field(j, "v"))};
}

inline json to_json(const Genus1Model& g) {
    json j = document();
    j["g"] = to_json(g.g());
    j["f6"] = to_json(g.f6());
    j["Ydelta"] = to_json(g.Ydelta());
    j["h_alpha"] = to_json(g.h_alpha());
    json H = json::array();
    for (const auto& c : g.H()) H.push_back(to_json(c));
    j["H"] = H;
    return j;
}

inline Genus1Model genus1_from_json(const json& j) {
    check_schema(j);
    RatPoly g = poly_from_json(field(j, "g"));
    if (g.degree() < 1) raise(errc::malformed_input, "modulus g must have positive degree");
    auto B = QuotAlgebra<Rat>::make(g);
    const json& H = field(j, "H");
    if (!H.is_array() || H.size() != 5) raise(errc::malformed_input, "H needs five coefficients");
    std::vector<RatAlg> h;
    for (const auto& c : H) h.push_back(alg_from_json(c, B));
    Genus1Model m(B, g, BPoly(std::move(h)), rat_from_json(field(j, "f6")));
    m.set_twist_data(alg_from_json(field(j, "Ydelta"), B), alg_from_json(field(j, "h_alpha"), B));
    return m;
}

inline bool same_genus1(const Genus1Model& a, const Genus1Model& b) {
    const auto ha = a.H(), hb = b.H();
    return a.g() == b.g() && a.f6() == b.f6() && a.Ydelta().coeffs() == b.Ydelta().coeffs() &&
           a.h_alpha().coeffs() == b.h_alpha().coeffs() && ha.size() == hb.size() &&
           std::equal(ha.begin(), ha.end(), hb.begin(), [](const RatAlg& x, const RatAlg& y) { return x.coeffs() == y.coeffs(); });
}

// --- Kummer model --------------------------------------------------------

inline json model_document(const Genus5Model& m) {
    json j = document();
    json Q = json::array();
    for (const auto& q : m.kummer().Q()) Q.push_back(to_json(q));
    j["Q"] = Q;
    j["basis"] = "dual-v";
    j["gamma"] = to_json(std::vector<Rat>(m.gamma().begin(), m.gamma().end()));
    return j;
}

// --- local solvability ---------------------------------------------------

inline json to_json(const Witness& w) {
    json j;
    j["chart"] = w.chart;
    j["precision"] = w.precision;
    j["minor_valuation"] = w.minor_valuation;
    json lat = json::array(), v = json::array();
    for (const auto& x : w.lattice) lat.push_back(to_json(x));
    for (const auto& x : w.v) v.push_back(to_json(x));
    j["lattice"] = lat;
    j["v"] = v;
    return j;
}

inline Int int_from_json(const json& j) {
    if (!j.is_string()) raise(errc::malformed_input, "integer must be a decimal string");
    Int n;
    if (n.set_str(j.get<std::string>(), 10) != 0) raise(errc::malformed_input, "bad integer " + j.dump());
    return n;
}

inline Witness witness_from_json(const json& j) {
    Witness w;
    w.chart = field(j, "chart").get<unsigned>();
    w.precision = field(j, "precision").get<int>();
    w.minor_valuation = field(j, "minor_valuation").get<int>();
    const json &lat = field(j, "lattice"), &v = field(j, "v");
    if (lat.size() != 5 || v.size() != 6) raise(errc::malformed_input, "witness needs 5 lattice and 6 dual coordinates");
    for (std::size_t i = 0; i < 5; ++i) w.lattice[i] = int_from_json(lat[i]);
    for (std::size_t i = 0; i < 6; ++i) w.v[i] = int_from_json(v[i]);
    return w;
}

inline Status status_from_string(const std::string& s) {
    if (s == "solvable") return Status::solvable;
    if (s == "empty") return Status::empty;
    if (s == "unknown") return Status::unknown;
    raise(errc::malformed_input, "bad status \"" + s + "\"");
}

inline json to_json(const SolvabilityVerdict& v) {
    json j;
    j["prime"] = v.prime;
    j["status"] = to_string(v.status);
    j["depth"] = v.depth;
    j["method"] = v.method;
    j["nodes"] = v.nodes;
    j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    return j;
}

inline SolvabilityVerdict verdict_from_json(const json& j) {
    SolvabilityVerdict v;
    v.prime = field(j, "prime").get<u64>();
    v.status = status_from_string(field(j, "status").get<std::string>());
    v.depth = field(j, "depth").get<int>();
    v.method = field(j, "method").get<std::string>();
    v.nodes = field(j, "nodes").get<std::uint64_t>();
    if (!field(j, "witness").is_null()) v.witness = witness_from_json(j["witness"]);
    return v;
}

inline json to_json(const ElsReport& r) {
    json j = document();
    j["label"] = r.label;
    j["twist"] = to_json(r.twist);
    json vs = json::array();
    for (const auto& v : r.verdicts) vs.push_back(to_json(v));
    j["verdicts"] = vs;
    j["overall"] = r.overall;
    j["real_place_checked"] = r.real_place_checked;
    j["note"] = "finite places only; the real place is not checked";
    return j;
}

inline ElsReport els_from_json(const json& j) {
    check_schema(j);
    ElsReport r;
    r.label = field(j, "label").get<std::string>();
    r.twist = rats_from_json(field(j, "twist"));
    for (const auto& v : field(j, "verdicts")) r.verdicts.push_back(verdict_from_json(v));
    r.overall = field(j, "overall").get<std::string>();
    r.real_place_checked = field(j, "real_place_checked").get<bool>();
    return r;
}

} // namespace g2desc::io
