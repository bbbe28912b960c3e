#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "../error.hpp"

namespace g2desc {

/// Dense row-major matrix over a commutative ring.
template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const R& zero, const R& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::span<const R> row(std::size_t i) const { return {a_.data() + i * c_, c_}; }

    Matrix transpose() const {
        Matrix t(c_, r_, a_.empty() ? R{} : a_[0]);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) raise(errc::invariant_violation, "matrix shape mismatch");
        Matrix m(a.r_, b.c_, zero_like(a.a_.at(0)));
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const R& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator*(const R& s, Matrix a) {
        for (auto& x : a.a_) x = s * x;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

    std::vector<R> apply(std::span<const R> v) const {
        std::vector<R> out(r_, zero_like(v[0]));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_symmetric() const {
        if (r_ != c_) return false;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < c_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.r_; ++i) {
            os << (i ? "\n[" : "[");
            for (std::size_t j = 0; j < m.c_; ++j) os << (j ? " " : "") << m(i, j);
            os << ']';
        }
        return os;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<R> a_;
};

template <class R>
Matrix<R> matrix_pow(const Matrix<R>& m, unsigned e, const R& zero, const R& one) {
    Matrix<R> r = Matrix<R>::identity(m.rows(), zero, one), b = m;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

/// Fraction-free (Bareiss) determinant; R must be an integral domain with exact division.
template <class R>
R det_bareiss(Matrix<R> m, const R& one) {
    const std::size_t n = m.rows();
    if (n == 0) return one;
    R prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t s = k + 1;
            while (s < n && is_zero(m(s, k))) ++s;
            if (s == n) return zero_like(one);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = zero_like(one);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? -d : d;
}

/// Characteristic polynomial coefficients c_0 = 1, ..., c_n of det(lambda I - A) = sum c_k lambda^(n-k),
/// by Berkowitz' division-free algorithm (valid over any commutative ring).
template <class R>
std::vector<R> charpoly_berkowitz(const Matrix<R>& a, const R& one) {
    const std::size_t n = a.rows();
    const R zero = zero_like(one);
    std::vector<R> c{one};
    for (std::size_t r = 0; r < n; ++r) {
        // q = (1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S)
        std::vector<R> q{one, -a(r, r)};
        std::vector<R> w(r, zero);
        for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            R dot = zero;
            for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * w[i];
            q.push_back(-dot);
            if (k + 1 < r) {
                std::vector<R> nw(r, zero);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) nw[i] += a(i, j) * w[j];
                w = std::move(nw);
            }
        }
        std::vector<R> nc(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] += q[i - j] * c[j];
        c = std::move(nc);
    }
    return c;
}

/// Division-free determinant over an arbitrary commutative ring.
template <class R>
R det_berkowitz(const Matrix<R>& a, const R& one) {
    auto c = charpoly_berkowitz(a, one);
    const R& last = c.back();
    return a.rows() % 2 == 0 ? last : -last;
}

} // namespace g2desc
