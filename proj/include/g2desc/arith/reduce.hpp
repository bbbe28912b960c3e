#pragma once

#include <vector>

#include "algebra.hpp"
#include "fp.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace g2desc {

inline UniPoly<FpElem> reduce_mod_p(const UniPoly<Rat>& a, u64 p) {
    std::vector<FpElem> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(reduce_mod_p(x, p));
    return UniPoly<FpElem>(std::move(c));
}

/// Image in F_p[X]/<m mod p>; the modulus must keep its degree mod p.
inline AlgElem<FpElem> reduce_mod_p(const AlgElem<Rat>& a, u64 p) {
    auto m = reduce_mod_p(a.parent()->modulus(), p);
    if (m.degree() != a.parent()->modulus().degree())
        raise(errc::denominator_divisible, "leading coefficient of the modulus vanishes mod " + std::to_string(p));
    auto A = QuotAlgebra<FpElem>::make(std::move(m));
    std::vector<FpElem> c;
    for (const auto& x : a.coeffs()) c.push_back(reduce_mod_p(x, p));
    return AlgElem<FpElem>(A, std::move(c));
}

inline AlgElem<FpElem> reduce_mod_p(const AlgElem<Rat>& a, const AlgebraPtr<FpElem>& target) {
    std::vector<FpElem> c;
    const u64 p = target->one().modulus();
    for (const auto& x : a.coeffs()) c.push_back(reduce_mod_p(x, p));
    return AlgElem<FpElem>(target, std::move(c));
}

inline Matrix<FpElem> reduce_mod_p(const Matrix<Rat>& m, u64 p) {
    Matrix<FpElem> r(m.rows(), m.cols(), FpElem(0, p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = reduce_mod_p(m(i, j), p);
    return r;
}

} // namespace g2desc
