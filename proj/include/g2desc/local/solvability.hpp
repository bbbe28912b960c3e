#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fp_poly.hpp"
#include "padic.hpp"
#include "primes.hpp"
#include "reduced.hpp"

namespace g2desc {

struct SearchOptions {
    int max_depth = 20;
    std::uint64_t node_budget = 2'000'000;
    unsigned threads = default_threads();
    /// Odd primes up to this bound get exhaustive residue seeds from a full scan of P^4(F_p).
    u64 scan_bound = 97;
    /// Fibers of pi-bar tried per prime when the scan is out of reach.
    u64 fiber_trials = 4096;
};

namespace detail {

inline u64 non_residue(u64 p) {
    for (u64 n = 2;; ++n)
        if (powmod(n, (p - 1) / 2, p) == p - 1) return n;
}

/// Normalize x (mod p) to chart form: first unit coordinate 1, earlier ones 0.
inline std::optional<padic::Node> chart_node(const Vec5& x, u64 p) {
    const Int P(static_cast<unsigned long>(p));
    std::size_t i = 0;
    while (i < 5 && mod_ui(x[i], p) == 0) ++i;
    if (i == 5) return std::nullopt;
    const u64 inv = invmod(mod_ui(x[i], p), p);
    padic::Node n;
    n.chart = static_cast<unsigned>(i);
    for (std::size_t l = 0; l < 5; ++l) n.x[l] = l < i ? 0 : mulmod(mod_ui(x[l], p), inv, p);
    return n;
}

inline Witness make_witness(const IntegralModel& im, const padic::Node& n, int t) {
    return {n.chart, 2 * t + 1, t, n.x, im.to_dual(n.x)};
}

/// Candidate residues from square roots of c delta^{-1} (X - alpha)(X - t) in F_p[X]/<f>.
template <class Visit>
void fiber_candidates(const Genus5Model& m, u64 p, u64 trials, Visit&& visit) {
    const auto& c = m.curve();
    const FpPoly f = reduce_mod_p(c.f(), p);
    const fp::SplitAlgebra A(f);
    const FpPoly d = reduce_mod_p(m.twist().delta().poly(), p);
    const FpPoly dinv = fp::inverse_mod(d, A.modulus());
    if (dinv.is_zero()) return;
    const FpElem alpha = reduce_mod_p(c.alpha(), p);
    const auto Tinv = reduce_mod_p(m.kummer().T_inverse(), p);
    const FpPoly xa = fp::x(p) - FpPoly::constant(alpha);
    const u64 n = non_residue(p);
    for (u64 k = 0; k < trials && k <= p; ++k) {
        // k = 0 is the fiber over infinity, k > 0 the fiber over t = k - 1
        FpPoly lin = k == 0 ? xa : xa * (fp::x(p) - fp::constant(k - 1, p));
        const FpPoly u0 = fp::mulmod(dinv, lin, A.modulus());
        for (u64 s : {u64(1), n}) {
            auto r = A.sqrt(FpElem(s, p) * u0);
            if (!r || r->is_zero()) continue;
            Vec6 v;
            for (std::size_t i = 0; i < 6; ++i) {
                FpElem acc(0, p);
                for (std::size_t j = 0; j < 6; ++j) acc += Tinv(i, j) * r->coeff(j, FpElem(0, p));
                v[i] = Int(static_cast<unsigned long>(acc.value()));
            }
            if (!visit(v)) return;
        }
    }
}

} // namespace detail

/// Seeds at level 1 and whether they are all live classes mod p.
inline std::pair<std::vector<padic::Node>, bool> level_one_seeds(const Genus5Model& m, const IntegralModel& im,
                                                                   const SearchOptions& opt) {
    const u64 p = im.p();
    std::vector<padic::Node> seeds;
    if (p == 2) {
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned bits = 0; bits < (1u << (4 - i)); ++bits) {
                padic::Node n;
                n.chart = i;
                for (unsigned l = 0; l < 5; ++l) n.x[l] = l < i ? 0 : l == i ? 1 : (bits >> (4 - l)) & 1;
                if (im.keep(n, 1)) seeds.push_back(n);
            }
        return {seeds, true};
    }
    if (p <= opt.scan_bound) {
        for (const auto& y : collect_projective(im.reduced_forms(), std::size_t(-1), opt.threads)) {
            Vec5 x;
            for (std::size_t l = 0; l < 5; ++l) x[l] = Int(static_cast<unsigned long>(y[l]));
            auto n = detail::chart_node(x, p);
            if (n && im.keep(*n, 1)) seeds.push_back(*n);
        }
        return {seeds, true};
    }
    std::set<std::pair<unsigned, std::vector<Int>>> seen;
    detail::fiber_candidates(m, p, opt.fiber_trials, [&](const Vec6& v) {
        auto n = detail::chart_node(im.from_dual(v), p);
        if (!n || !im.keep(*n, 1)) return true;
        if (!seen.insert({n->chart, {n->x.begin(), n->x.end()}}).second) return true;
        seeds.push_back(*n);
        // one smooth residue settles the question
        return !im.hensel(*n).has_value();
    });
    return {seeds, false};
}

/// p-adic search for Z_delta(Q_p): Solvable with a Hensel witness, Empty when every class dies, else Unknown.
inline SolvabilityVerdict solvable_at_p(const Genus5Model& m, u64 p, const SearchOptions& opt = {}) {
    SolvabilityVerdict out;
    out.prime = p;
    out.method = "search";
    const IntegralModel im(m, p);
    auto [frontier, exhaustive] = level_one_seeds(m, im, opt);
    if (!exhaustive) out.method = "fiber-search";
    for (int k = 1;; ++k) {
        out.depth = k;
        out.nodes += frontier.size();
        for (const auto& n : frontier)
            if (auto t = im.hensel(n)) {
                out.status = Status::solvable;
                out.witness = detail::make_witness(im, n, *t);
                return out;
            }
        if (frontier.empty()) {
            out.status = exhaustive ? Status::empty : Status::unknown;
            return out;
        }
        if (!exhaustive || k >= opt.max_depth || out.nodes > opt.node_budget) {
            out.status = Status::unknown;
            return out;
        }
        std::vector<padic::Node> next;
        for (const auto& n : frontier) {
            const std::uint64_t room = opt.node_budget - std::min(opt.node_budget, out.nodes + next.size());
            if (!im.children(n, k, room, [&](padic::Node c) { next.push_back(std::move(c)); }) ||
                out.nodes + next.size() > opt.node_budget) {
                out.status = Status::unknown;
                return out;
            }
        }
        frontier = std::move(next);
    }
}

/// Good odd p: count points mod p; a smooth point lifts by Hensel.
inline SolvabilityVerdict solvable_by_count(const Genus5Model& m, u64 p, unsigned threads = default_threads()) {
    SolvabilityVerdict out;
    out.prime = p;
    out.method = "count";
    out.depth = 1;
    if (auto why = bad_reduction_reason(m, p)) raise(errc::bad_reduction, "bad reduction at " + std::to_string(p) + ": " + *why);
    const auto r = reduced_model(m, p);
    out.nodes = count_projective(r.forms, threads);
    if (out.nodes == 0) {
        out.status = Status::empty;
        return out;
    }
    auto y = find_projective(r.forms, [&](const std::vector<u64>& y) { return jacobian_rank(r, y) == 3; }, threads);
    if (!y) {
        out.status = Status::unknown;
        return out;
    }
    Witness w;
    std::size_t i = 0;
    while ((*y)[i] == 0) ++i;
    w.chart = static_cast<unsigned>(i);
    for (std::size_t l = 0; l < 5; ++l) w.lattice[l] = Int(static_cast<unsigned long>((*y)[l]));
    const auto v = r.lift(*y);
    for (std::size_t l = 0; l < 6; ++l) w.v[l] = Int(static_cast<unsigned long>(v[l].value()));
    out.witness = w;
    out.status = Status::solvable;
    return out;
}

struct ElsReport {
    std::string label;
    std::vector<Rat> twist;
    std::vector<SolvabilityVerdict> verdicts;
    /// "true", "false", or "unknown"
    std::string overall;
    bool real_place_checked = false;
    friend bool operator==(const ElsReport&, const ElsReport&) = default;
};

/// prime_list plus the odd primes where delta is not a p-adic unit.
inline std::vector<u64> els_primes(const Genus5Model& m) {
    std::set<Int> ps;
    for (const auto& p : prime_list(m.curve())) ps.insert(p);
    const Rat n = twist_norm(m.curve(), m.twist());
    for (const auto& p : prime_divisors(n.num())) ps.insert(p);
    for (const auto& p : prime_divisors(common_denominator(m.twist().delta().coeffs()))) ps.insert(p);
    std::vector<u64> out;
    for (const auto& p : ps) {
        if (!mpz_fits_ulong_p(p.get_mpz_t())) raise(errc::invariant_violation, "prime exceeds 64 bits");
        out.push_back(p.get_ui());
    }
    return out;
}

inline SolvabilityVerdict verdict_at(const Genus5Model& m, u64 p, const SearchOptions& opt) {
    if (!bad_reduction_reason(m, p)) return solvable_by_count(m, p, opt.threads);
    return solvable_at_p(m, p, opt);
}

inline ElsReport els_report(const Genus5Model& m, const SearchOptions& opt = {}, std::string label = {},
                            const std::vector<u64>& only = {}) {
    ElsReport rep;
    rep.label = std::move(label);
    rep.twist = m.twist().delta().coeffs();
    bool unknown = false, empty = false;
    for (u64 p : only.empty() ? els_primes(m) : only) {
        rep.verdicts.push_back(verdict_at(m, p, opt));
        empty |= rep.verdicts.back().status == Status::empty;
        unknown |= rep.verdicts.back().status == Status::unknown;
    }
    rep.overall = empty ? "false" : unknown ? "unknown" : "true";
    return rep;
}

} // namespace g2desc
