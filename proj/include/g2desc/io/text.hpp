#pragma once

// Parsers for the plain-text notation used in the bundled fixture files:
// polynomials like "2X^5 - 13X^2 + 1", binary forms "x^5 z - 3 x^3 z^3",
// projective points "(5 : -5 : 37)", and sets "\{-1, \infty, 13/5\}".

#include <array>
#include <cctype>
#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "../descent.hpp"

namespace g2desc::text {

[[noreturn]] inline void malformed(const std::string& what, std::string_view s) {
    raise(errc::malformed_input, what + ": \"" + std::string(s) + "\"");
}

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// Sum of monomials c * v1^e1 * ... in the given variables; exponents keyed by position in `vars`.
/// A variable may appear at most once in a monomial.
template <std::size_t N>
std::map<std::array<int, N>, Rat> parse_terms(std::string_view src, const std::array<char, N>& vars) {
    std::string s;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const char c = src[i];
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
            continue;
        }
        if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back())) && i + 1 < src.size()) {
            std::size_t j = i;
            while (j < src.size() && std::isspace(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) malformed("digits separated by space", src);
        }
    }
    if (s.empty()) malformed("empty expression", src);

    std::map<std::array<int, N>, Rat> out;
    std::size_t i = 0;
    auto read_int = [&](std::string& digits) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            malformed("expected + or -", src);
        }
        first = false;
        Rat coef(1);
        bool has_coef = false;
        std::string n;
        read_int(n);
        if (!n.empty()) {
            has_coef = true;
            std::string d;
            if (i < s.size() && s[i] == '/') {
                ++i;
                read_int(d);
                if (d.empty()) malformed("missing denominator", src);
            }
            coef = Rat::parse(d.empty() ? n : n + "/" + d);
        }
        std::array<int, N> e{};
        bool has_var = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            std::size_t k = 0;
            while (k < N && vars[k] != s[i]) ++k;
            if (k == N) malformed("unexpected character '" + std::string(1, s[i]) + "'", src);
            if (e[k] != 0) malformed("repeated variable in monomial", src);
            ++i;
            int power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string p;
                read_int(p);
                if (p.empty()) malformed("missing exponent", src);
                power = std::stoi(p);
                if (power == 0) malformed("zero exponent", src);
            }
            e[k] = power;
            has_var = true;
        }
        if (!has_coef && !has_var) malformed("empty term", src);
        out[e] += sign < 0 ? -coef : coef;
    }
    return out;
}

/// Univariate polynomial in X (or x).
inline RatPoly parse_poly(std::string_view s) {
    auto terms = parse_terms<2>(s, {'X', 'x'});
    std::vector<Rat> c;
    bool sawX = false, sawx = false;
    for (const auto& [e, v] : terms) {
        sawX |= e[0] != 0;
        sawx |= e[1] != 0;
        const auto d = static_cast<std::size_t>(e[0] + e[1]);
        if (c.size() <= d) c.resize(d + 1);
        c[d] += v;
    }
    if (sawX && sawx) malformed("mixed variables X and x", s);
    return RatPoly(std::move(c));
}

/// Homogeneous binary form of the given degree in x and z.
inline BinaryForm parse_binary_form(std::string_view s, int degree) {
    auto terms = parse_terms<2>(s, {'x', 'z'});
    BinaryForm out{degree, std::vector<Rat>(static_cast<std::size_t>(degree + 1))};
    for (const auto& [e, v] : terms) {
        if (e[0] + e[1] != degree) malformed("term of wrong total degree (expected " + std::to_string(degree) + ")", s);
        out.c[static_cast<std::size_t>(e[0])] += v;
    }
    return out;
}

/// "(a : b : c)" -> {a, b, c}
inline std::vector<Rat> parse_tuple(std::string_view s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') malformed("expected (a : b : ...)", s);
    std::vector<Rat> out;
    std::string_view body(t);
    body = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = body.find(':', start);
        const std::string tok = trim(body.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (tok.empty()) malformed("empty coordinate", s);
        try {
            out.push_back(Rat::parse(tok));
        } catch (const error&) {
            malformed("bad coordinate", s);
        }
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    return out;
}

inline ProjPoint4 parse_point4(std::string_view s) {
    auto v = parse_tuple(s);
    if (v.size() != 5) malformed("expected five coordinates", s);
    return ProjPoint4({v[0], v[1], v[2], v[3], v[4]});
}

inline P1Point parse_p1(std::string_view s) {
    const std::string t = trim(s);
    if (t == "\\infty" || t == "inf" || t == "∞") return P1Point::infinity();
    try {
        return P1Point::from_rat(Rat::parse(t));
    } catch (const error&) {
        malformed("expected a rational number or \\infty", s);
    }
}

/// "\{a, b, ...\}" or "{a, b, ...}"
inline std::vector<P1Point> parse_p1_set(std::string_view s) {
    std::string t = trim(s);
    if (t.starts_with("\\{") && t.ends_with("\\}")) {
        t = t.substr(2, t.size() - 4);
    } else if (t.starts_with("{") && t.ends_with("}")) {
        t = t.substr(1, t.size() - 2);
    } else {
        malformed("expected a braced set", s);
    }
    std::vector<P1Point> out;
    std::size_t start = 0;
    while (start <= t.size()) {
        const std::size_t comma = t.find(',', start);
        const std::string tok = trim(std::string_view(t).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!tok.empty()) out.push_back(parse_p1(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// "y^2 + (q) y = r" or "y^2 + q y = r" with q a single monomial.
inline std::pair<BinaryForm, BinaryForm> parse_minimal_equation(std::string_view s) {
    static const std::regex re(R"(^\s*y\^2\s*\+\s*(?:\(([^)]*)\)|([^()=]*?))\s*y\s*=\s*(.+)$)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(s.begin(), s.end(), m, re)) malformed("expected y^2 + q y = r", s);
    const std::string q = m[1].matched ? m[1].str() : m[2].str();
    return {parse_binary_form(q, 3), parse_binary_form(m[3].str(), 6)};
}

/// "y^2 = F(x, z)" with F a sextic form.
inline BinaryForm parse_sextic_model(std::string_view s) {
    static const std::regex re(R"(^\s*y\^2\s*=\s*(.+)$)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(s.begin(), s.end(), m, re)) malformed("expected y^2 = F(x, z)", s);
    return parse_binary_form(m[1].str(), 6);
}

struct Evaluation {
    std::size_t twist; ///< 1-based
    ProjPoint4 point;
    P1Point value;
};

/// "\bar{\pi}_{\delta_4}( (5 : -5 : 5 : -21 : 37) ) = 13/5"; a bare subscript "_1" means delta_1.
inline Evaluation parse_evaluation(std::string_view s) {
    static const std::regex re(R"(^\s*\\bar\{\\pi\}_(?:\{\\delta_(\d+)\}|(\d+))\s*\(\s*(\([^)]*\))\s*\)\s*=\s*(.+)$)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(s.begin(), s.end(), m, re)) malformed("expected \\bar{\\pi}_{\\delta_i}( P ) = value", s);
    const std::size_t idx = std::stoul(m[1].matched ? m[1].str() : m[2].str());
    return {idx, parse_point4(m[3].str()), parse_p1(m[4].str())};
}

/// Weierstrass x-coordinate from "(a : 0 : c)".
inline Rat parse_weierstrass_x(std::string_view s) {
    auto v = parse_tuple(s);
    if (v.size() != 3 || !v[1].is_zero()) malformed("expected (x : 0 : z)", s);
    if (v[2].is_zero()) malformed("Weierstrass point at infinity of the sextic model", s);
    return v[0] / v[2];
}

/// Dehomogenize at z = 1.
inline RatPoly dehomogenize(const BinaryForm& F) { return RatPoly(F.c); }

} // namespace g2desc::text
