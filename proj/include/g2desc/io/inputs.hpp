#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace g2desc::io {

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(errc::malformed_input, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        raise(errc::malformed_input, path.string() + ": " + e.what());
    }
}

/// {"f", "alpha"}; a curve record {"sextic", "alpha"}; or a fixture file with a printed model.
inline SexticCurve curve_from_document(const json& j) {
    check_schema(j);
    if (j.contains("f")) return curve_from_json(j);
    if (j.contains("sextic")) return SexticCurve::make(poly_from_json(j["sextic"]), rat_from_json(field(j, "alpha")));
    if (j.contains("model")) {
        const RatPoly f = text::dehomogenize(text::parse_sextic_model(j["model"].get<std::string>()));
        return SexticCurve::make(f, text::parse_weierstrass_x(field(j, "weierstrass_point").get<std::string>()));
    }
    raise(errc::malformed_input, "curve document needs \"f\" and \"alpha\"");
}

/// {"delta"}, {"twists": [...]}, or a bare array of either deltas or {"delta"} objects.
inline std::vector<Twist> twists_from_document(const json& j, const SexticCurve& c) {
    auto one = [&](const json& t) {
        if (t.is_object()) return twist_from_json(t, c);
        return Twist::make(c, poly_from_json(t).coeffs());
    };
    if (j.is_object() && j.contains("delta")) return {twist_from_json(j, c)};
    const json& a = j.is_object() ? (check_schema(j), field(j, "twists")) : j;
    if (!a.is_array()) raise(errc::malformed_input, "expected a twist or a list of twists");
    std::vector<Twist> out;
    for (const auto& t : a) out.push_back(one(t));
    return out;
}

struct Inputs {
    SexticCurve curve;
    std::vector<Twist> twists;
    std::vector<ProjPoint4> points;
};

/// Validates everything at parse time; a missing twist document means delta = 1.
inline Inputs parse_inputs(const json& curve, const std::optional<json>& twists = std::nullopt,
                           const std::optional<json>& points = std::nullopt) {
    SexticCurve c = curve_from_document(curve);
    std::vector<Twist> tw = twists ? twists_from_document(*twists, c) : std::vector<Twist>{Twist::make(c, {Rat(1)})};
    std::vector<ProjPoint4> pts = points ? points_from_json(*points) : std::vector<ProjPoint4>{};
    return {std::move(c), std::move(tw), std::move(pts)};
}

inline Inputs parse_inputs(const std::filesystem::path& curve, const std::optional<std::filesystem::path>& twists = std::nullopt,
                           const std::optional<std::filesystem::path>& points = std::nullopt) {
    std::optional<json> t, p;
    if (twists) t = read_json_file(*twists);
    if (points) p = read_json_file(*points);
    return parse_inputs(read_json_file(curve), t, p);
}

} // namespace g2desc::io
