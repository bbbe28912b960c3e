#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "../error.hpp"

namespace g2desc {

using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(int v) : v_(static_cast<long>(v)) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& n, const Int& d) {
        if (d == 0) raise(errc::division_by_zero, "zero denominator");
        v_.get_num() = n;
        v_.get_den() = d;
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "n" or "n/d" with optional sign; any d != 0 is accepted and normalized.
    static Rat parse(std::string_view s) {
        std::string t;
        for (char c : s)
            if (c != ' ' && c != '\t' && c != '\n') t.push_back(c);
        if (t.empty()) raise(errc::malformed_input, "empty rational");
        auto slash = t.find('/');
        Int n, d = 1;
        if (!parse_int(t.substr(0, slash), n)) raise(errc::malformed_input, "bad rational '" + std::string(s) + "'");
        if (slash != std::string::npos && !parse_int(t.substr(slash + 1), d))
            raise(errc::malformed_input, "bad rational '" + std::string(s) + "'");
        if (d == 0) raise(errc::malformed_input, "zero denominator in '" + std::string(s) + "'");
        return Rat(n, d);
    }

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat inverse() const {
        if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
        return Rat(den(), num());
    }

    std::string to_string() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) raise(errc::division_by_zero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
    static bool parse_int(const std::string& s, Int& out) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        out.set_str(s[0] == '+' ? s.substr(1) : s, 10);
        return true;
    }

    mpq_class v_;
};

// Ring helpers looked up by generic code through ADL.
inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inverse(const Rat& r) { return r.inverse(); }

inline Rat pow(const Rat& b, unsigned e) {
    Rat r(1), x = b;
    for (; e; e >>= 1) {
        if (e & 1) r *= x;
        x *= x;
    }
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// p-adic valuation of a nonzero integer; `infinite_valuation` for zero.
inline constexpr int infinite_valuation = 1 << 28;

inline int valuation(const Int& n, unsigned long p) {
    if (n == 0) return infinite_valuation;
    if (p == 2) return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
    Int m = n;
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

} // namespace g2desc

template <>
struct std::hash<g2desc::Rat> {
    std::size_t operator()(const g2desc::Rat& r) const noexcept {
        return std::hash<std::string>{}(r.to_string());
    }
};
