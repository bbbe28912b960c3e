#pragma once

#include "../error.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace g2desc {

/// Sylvester matrix of a (degree m) and b (padded to formal degree n): n shifted rows of a, then m of b.
template <class R>
Matrix<R> sylvester(const UniPoly<R>& a, const UniPoly<R>& b, int formal_deg_b, const R& zero) {
    const int m = a.degree();
    const int n = formal_deg_b;
    if (m < 0) raise(errc::invariant_violation, "Sylvester matrix of the zero polynomial");
    if (b.degree() > n) raise(errc::degree_exceeded, "degree of b exceeds its formal degree");
    const auto size = static_cast<std::size_t>(m + n);
    Matrix<R> s(size, size, zero);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + m - i)) = a[static_cast<std::size_t>(i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + n - i)) = b.coeff(static_cast<std::size_t>(i), zero);
    return s;
}

/// prod_{a(r)=0} b(r) for monic a: the Sylvester determinant with b padded to `formal_deg_b`.
/// Uses the division-free determinant, so R may have zero divisors.
template <class R>
R resultant_monic(const UniPoly<R>& a, const UniPoly<R>& b, int formal_deg_b, const R& one) {
    if (a.is_zero() || !(a.lead() == one)) raise(errc::invariant_violation, "resultant_monic requires a monic first argument");
    if (b.degree() > formal_deg_b) raise(errc::degree_exceeded, "degree of b exceeds its formal degree");
    return det_berkowitz(sylvester(a, b, formal_deg_b, zero_like(one)), one);
}

/// Res(a, b) over an integral domain (Bareiss), b at its true degree.
template <class R>
R resultant(const UniPoly<R>& a, const UniPoly<R>& b, const R& one) {
    if (a.is_zero() || b.is_zero()) return zero_like(one);
    return det_bareiss(sylvester(a, b, b.degree(), zero_like(one)), one);
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline Rat discriminant(const UniPoly<Rat>& f) {
    const int n = f.degree();
    if (n < 1) raise(errc::invariant_violation, "discriminant needs degree >= 1");
    if (n == 1) return Rat(1);
    Rat r = resultant(f, derivative(f), Rat(1)) / f.lead();
    return ((n * (n - 1) / 2) % 2) ? -r : r;
}

} // namespace g2desc
