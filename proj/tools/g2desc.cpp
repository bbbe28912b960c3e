// g2desc: command-line front end. Every JSON document written carries "schema": "g2desc/1".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <g2desc/io/fixtures.hpp>
#include <g2desc/io/inputs.hpp>

namespace {

using namespace g2desc;
using io::json;

struct Globals {
    std::string out = "-";
    unsigned threads = default_threads();
    int max_depth = SearchOptions{}.max_depth;
};

struct Sources {
    std::string curve, twist, points, fixture;
    std::size_t twist_index = 0; ///< 1-based; 0 means every twist
};

void add_sources(CLI::App* sub, Sources& s, bool want_points) {
    sub->add_option("--curve", s.curve, "curve document: {\"f\", \"alpha\"}");
    sub->add_option("--twist", s.twist, "twist document: {\"delta\"} or {\"twists\": [...]}; default delta = 1");
    if (want_points) sub->add_option("--points", s.points, "points document: {\"points\": [...]}");
    sub->add_option("--fixture", s.fixture, "use a bundled example (6982, 6443, 141991) instead of --curve");
    sub->add_option("--twist-index", s.twist_index, "with --fixture: pick one twist (1-based)");
}

struct Loaded {
    io::Inputs in;
    /// points per twist; empty lists when none were supplied
    std::vector<std::vector<ProjPoint4>> points;
    std::string label;
};

Loaded load(const Sources& s) {
    if (!s.fixture.empty()) {
        for (const auto& [name, text] : fixture_data::files) {
            if (name != s.fixture) continue;
            const auto fx = io::load_fixture(json::parse(text));
            json tw = json::array();
            for (const auto& t : fx.twists) tw.push_back(io::to_json(t.delta));
            Loaded l{io::parse_inputs(io::to_json(fx.curve.curve()), tw), {}, fx.curve.label};
            l.points.resize(l.in.twists.size());
            for (const auto& e : fx.evaluations) l.points[e.twist - 1].push_back(e.point);
            if (!s.points.empty()) {
                auto pts = io::points_from_json(io::read_json_file(s.points));
                for (auto& p : l.points) p = pts;
            }
            if (s.twist_index) {
                if (s.twist_index > l.in.twists.size()) raise(errc::malformed_input, "twist index out of range");
                l.in.twists = {l.in.twists[s.twist_index - 1]};
                l.points = {l.points[s.twist_index - 1]};
            }
            return l;
        }
        raise(errc::malformed_input, "no bundled fixture named \"" + s.fixture + "\"");
    }
    if (s.curve.empty()) raise(errc::malformed_input, "--curve or --fixture is required");
    std::optional<std::filesystem::path> tw, pts;
    if (!s.twist.empty()) tw = s.twist;
    if (!s.points.empty()) pts = s.points;
    Loaded l{io::parse_inputs(s.curve, tw, pts), {}, {}};
    l.points.assign(l.in.twists.size(), l.in.points);
    return l;
}

void emit(const Globals& g, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) raise(errc::malformed_input, "cannot write " + g.out);
    f << text;
}

json results(json list) {
    json j = io::document();
    j["results"] = std::move(list);
    return j;
}

json error_entry(const std::exception& e) { return {{"error", e.what()}}; }

int cmd_model(const Globals& g, const Sources& s) {
    const auto l = load(s);
    json list = json::array();
    for (const auto& t : l.in.twists) {
        json m = io::model_document(genus5_model(l.in.curve, t));
        m.erase("schema");
        m["delta"] = io::to_json(t.delta());
        list.push_back(m);
    }
    emit(g, results(list));
    return 0;
}

int cmd_dup(const Globals& g, const Sources& s) {
    const auto l = load(s);
    json list = json::array();
    int rc = 0;
    for (std::size_t i = 0; i < l.in.twists.size(); ++i) {
        const auto m = genus5_model(l.in.curve, l.in.twists[i]);
        for (const auto& P : l.points[i]) {
            json e{{"delta", io::to_json(l.in.twists[i].delta())}, {"point", io::to_json(P)}};
            e["on_curve"] = is_on_curve(m, P);
            try {
                e["pi_bar"] = io::to_json(dup_map(m, P));
            } catch (const error& ex) {
                e.update(error_entry(ex));
                rc = 1;
            }
            list.push_back(e);
        }
    }
    emit(g, results(list));
    return rc;
}

int cmd_genus1(const Globals& g, const Sources& s) {
    const auto l = load(s);
    json list = json::array();
    for (const auto& t : l.in.twists) {
        json d = io::to_json(genus1_model(l.in.curve, t));
        d.erase("schema");
        d["delta"] = io::to_json(t.delta());
        list.push_back(d);
    }
    emit(g, results(list));
    return 0;
}

int cmd_phi(const Globals& g, const Sources& s) {
    const auto l = load(s);
    json list = json::array();
    int rc = 0;
    for (std::size_t i = 0; i < l.in.twists.size(); ++i) {
        const auto m = genus5_model(l.in.curve, l.in.twists[i]);
        const auto d = genus1_model(l.in.curve, l.in.twists[i]);
        for (const auto& P : l.points[i]) {
            json e{{"delta", io::to_json(l.in.twists[i].delta())}, {"point", io::to_json(P)}};
            try {
                const auto w = phi_map(m, d, P);
                e.update(io::to_json(w));
                e["pi_bar"] = io::to_json(P1Point::from_coords(w.u, w.v));
                e["on_D"] = on_D(d, w);
                if (!e["on_D"].get<bool>()) rc = 1;
            } catch (const error& ex) {
                e.update(error_entry(ex));
                rc = 1;
            }
            list.push_back(e);
        }
    }
    emit(g, results(list));
    return rc;
}

int cmd_locsolve(const Globals& g, const Sources& s, const std::vector<u64>& primes, std::uint64_t budget) {
    const auto l = load(s);
    SearchOptions opt;
    opt.threads = g.threads;
    opt.max_depth = g.max_depth;
    opt.node_budget = budget;
    json list = json::array();
    for (const auto& t : l.in.twists) {
        json r = io::to_json(els_report(genus5_model(l.in.curve, t), opt, l.label, primes));
        r.erase("schema");
        list.push_back(r);
    }
    emit(g, results(list));
    return 0;
}

int cmd_pack(const Globals& g, const Sources& s) {
    const auto l = load(s);
    emit(g, io::emit_chabauty_pack(l.in.curve, l.in.twists, l.label));
    return 0;
}

int cmd_verify(const Globals& g, bool skip_els, const std::vector<u64>& primes) {
    io::FixtureOptions opt;
    opt.els = !skip_els;
    opt.els_primes = primes;
    opt.search.threads = g.threads;
    opt.search.max_depth = g.max_depth;
    const auto rep = io::run_fixtures(opt);
    json list = json::array();
    for (const auto& c : rep.checks) {
        std::cerr << (c.ok ? "PASS " : "FAIL ") << c.label << ": " << c.check << (c.detail.empty() ? "" : " [" + c.detail + "]")
                  << "\n";
        list.push_back({{"label", c.label}, {"check", c.check}, {"ok", c.ok}, {"detail", c.detail}});
    }
    std::cerr << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
    json j = results(list);
    j["ok"] = rep.ok();
    if (g.out != "-") emit(g, j);
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"g2desc: two-cover descent on genus-2 curves with a rational Weierstrass point"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--json,--out", g.out, "output path, '-' for stdout")->capture_default_str();
    app.add_option("--threads", g.threads, "scanner threads")->envname("G2DESC_THREADS")->check(CLI::PositiveNumber);
    app.add_option("--max-depth", g.max_depth, "p-adic search depth")->capture_default_str();

    Sources s;
    auto* model = app.add_subcommand("model", "quadrics Q0..Q5 and the hyperplane of Z_delta");
    add_sources(model, s, false);
    auto* dup = app.add_subcommand("dup", "twisted duplication map on points of Z_delta");
    add_sources(dup, s, true);
    auto* g1 = app.add_subcommand("genus1", "the genus-one quotient D over B");
    add_sources(g1, s, false);
    auto* phi = app.add_subcommand("phi", "images of points on D");
    add_sources(phi, s, true);
    auto* loc = app.add_subcommand("locsolve", "local solvability at finite primes");
    add_sources(loc, s, false);
    std::vector<u64> primes;
    std::uint64_t budget = SearchOptions{}.node_budget;
    loc->add_option("--primes", primes, "only these primes")->delimiter(',');
    loc->add_option("--node-budget", budget, "search nodes per prime")->capture_default_str();
    auto* pack = app.add_subcommand("pack", "input pack for elliptic Chabauty over a twist family");
    add_sources(pack, s, false);
    auto* verify = app.add_subcommand("verify", "replay the bundled examples");
    bool skip_els = false;
    verify->add_flag("--skip-els", skip_els, "skip local solvability");
    verify->add_option("--primes", primes, "local solvability only at these primes")->delimiter(',');

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*model) return cmd_model(g, s);
        if (*dup) return cmd_dup(g, s);
        if (*g1) return cmd_genus1(g, s);
        if (*phi) return cmd_phi(g, s);
        if (*loc) return cmd_locsolve(g, s, primes, budget);
        if (*pack) return cmd_pack(g, s);
        if (*verify) return cmd_verify(g, skip_els, primes);
    } catch (const std::exception& e) {
        std::cerr << "g2desc: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
