#pragma once

#include <vector>

#include "../descent.hpp"
#include "json.hpp"

namespace g2desc::io {

/// Input for elliptic Chabauty on a twist family: B, h(alpha), and H are shared,
/// so class-group work over B is done once; each twist adds Y(delta) and its quadrics.
inline json emit_chabauty_pack(const SexticCurve& c, const std::vector<Twist>& twists, const std::string& label = {}) {
    json j = document();
    j["label"] = label;
    j["curve"] = to_json(c);
    j["curve"].erase("schema");
    const Twist one = Twist::make(c, {Rat(1)});
    const Genus1Model base = genus1_model(c, one);
    j["B"] = {{"modulus", to_json(base.g())}};
    j["h_alpha"] = to_json(base.h_alpha());
    json H = json::array();
    for (const auto& x : base.H()) H.push_back(to_json(x));
    j["H"] = H;
    const Genus5Model m1 = genus5_model(c, one);
    j["gamma"] = to_json(std::vector<Rat>(m1.gamma().begin(), m1.gamma().end()));
    j["pi_bar"] = {{"u", "-(f5 + f6 alpha) Q3 - f6 Q4"}, {"v", "f6 Q3"}, {"s", "f6^3 Y(xi)"}};
    json sections = json::array();
    for (const auto& t : twists) {
        const Genus5Model m = genus5_model(c, t);
        json s;
        s["delta"] = to_json(t.delta());
        s["Ydelta"] = to_json(quartic_Y(base, t.delta()));
        json Q = json::array();
        for (const auto& q : m.kummer().Q()) Q.push_back(to_json(q));
        s["Q"] = Q;
        sections.push_back(s);
    }
    j["twists"] = sections;
    return j;
}

} // namespace g2desc::io
