#pragma once

// Exhaustive enumeration of P^{d-1}(F_p) against a system of quadratic forms.
// Points are visited as normalized representatives (first nonzero coordinate 1);
// along the last coordinate each form is updated by first differences only.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "../arith/fp.hpp"
#include "../arith/matrix.hpp"

namespace g2desc {

/// G2DESC_THREADS if set, then hardware concurrency.
inline unsigned default_threads() {
    if (const char* s = std::getenv("G2DESC_THREADS")) {
        const long n = std::strtol(s, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    const unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Quadratic forms x^T M x over F_p in `dim` variables; matrices row-major, symmetric, entries < p.
struct FormSystem {
    u64 p = 0;
    std::size_t dim = 0;
    std::vector<std::vector<u64>> m;

    u64 entry(std::size_t j, std::size_t a, std::size_t b) const { return m[j][a * dim + b]; }
    u64 eval(std::size_t j, const u64* x) const {
        u64 s = 0;
        for (std::size_t a = 0; a < dim; ++a) {
            if (!x[a]) continue;
            u64 row = 0;
            for (std::size_t b = 0; b < dim; ++b) row = (row + mulmod(entry(j, a, b), x[b], p)) % p;
            s = (s + mulmod(row, x[a], p)) % p;
        }
        return s;
    }
};

inline FormSystem to_form_system(const std::vector<Matrix<FpElem>>& ms, u64 p) {
    FormSystem fs{p, ms.empty() ? 0 : ms[0].rows(), {}};
    for (const auto& m : ms) {
        if (m.rows() != fs.dim || m.cols() != fs.dim || !m.is_symmetric())
            raise(errc::invariant_violation, "form system needs square symmetric matrices of one size");
        std::vector<u64> flat(fs.dim * fs.dim);
        for (std::size_t a = 0; a < fs.dim; ++a)
            for (std::size_t b = 0; b < fs.dim; ++b) flat[a * fs.dim + b] = m(a, b).value();
        fs.m.push_back(std::move(flat));
    }
    return fs;
}

namespace detail {

constexpr std::size_t max_forms = 8;

/// Prefixes are (lead k, x_{k+1}, ..., x_{d-2}); the last coordinate is swept inside.
class PrefixSpace {
public:
    PrefixSpace(u64 p, std::size_t d) : p_(p), d_(d) {
        if (d == 0) raise(errc::invariant_violation, "empty projective space");
        u64 size = 1;
        for (std::size_t k = d - 1; k-- > 0;) {
            // block k has p^(d-2-k) prefixes
            block_.insert(block_.begin(), size);
            if (k > 0 && size > std::numeric_limits<u64>::max() / p / p) raise(errc::invariant_violation, "projective space too large to enumerate");
            size *= p;
        }
        total_ = 1;
        for (auto b : block_) total_ += b;
    }
    u64 total() const { return total_; }

    /// Decode prefix index into x (x[d-1] = 0); returns the lead index k.
    std::size_t decode(u64 idx, u64* x) const {
        std::fill(x, x + d_, 0);
        std::size_t k = 0;
        while (k < block_.size() && idx >= block_[k]) idx -= block_[k++];
        x[k] = 1;
        for (std::size_t i = d_ - 1; i-- > k + 1;) {
            x[i] = idx % p_;
            idx /= p_;
        }
        return k;
    }

private:
    u64 p_;
    std::size_t d_;
    std::vector<u64> block_;
    u64 total_ = 0;
};

/// Calls on(x) for every zero in prefixes [begin, end); on returns false to stop.
template <class On>
bool sweep(const FormSystem& fs, const PrefixSpace& ps, u64 begin, u64 end, On&& on) {
    const u64 p = fs.p;
    const std::size_t d = fs.dim, n = fs.m.size(), last = d - 1;
    std::vector<u64> x(d);
    u64 q[max_forms], df[max_forms], a2[max_forms];
    for (u64 idx = begin; idx < end; ++idx) {
        const std::size_t k = ps.decode(idx, x.data());
        if (k == last) {
            bool zero = true;
            for (std::size_t j = 0; j < n && zero; ++j) zero = fs.entry(j, last, last) == 0;
            if (zero && !on(x.data())) return false;
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            q[j] = fs.eval(j, x.data());
            u64 b = 0;
            for (std::size_t i = 0; i < last; ++i) b = (b + mulmod(fs.entry(j, last, i), x[i], p)) % p;
            b = (2 * b) % p;
            const u64 a = fs.entry(j, last, last);
            df[j] = (b + a) % p;
            a2[j] = (2 * a) % p;
        }
        for (u64 t = 0; t < p; ++t) {
            bool zero = true;
            for (std::size_t j = 0; j < n; ++j) zero &= q[j] == 0;
            if (zero) {
                x[last] = t;
                if (!on(x.data())) return false;
            }
            for (std::size_t j = 0; j < n; ++j) {
                u64 s = q[j] + df[j];
                q[j] = s >= p ? s - p : s;
                s = df[j] + a2[j];
                df[j] = s >= p ? s - p : s;
            }
        }
        x[last] = 0;
    }
    return true;
}

template <class Work>
void run_chunks(u64 total, unsigned threads, Work&& work) {
    threads = std::max(1u, threads);
    const u64 chunks = std::min<u64>(total, static_cast<u64>(threads) * 64);
    const u64 step = (total + chunks - 1) / std::max<u64>(chunks, 1);
    std::atomic<u64> next{0};
    auto worker = [&] {
        for (u64 c; (c = next.fetch_add(1)) * step < total;) work(c, c * step, std::min(total, (c + 1) * step));
    };
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

} // namespace detail

/// Number of common zeros in P^{dim-1}(F_p).
inline u64 count_projective(const FormSystem& fs, unsigned threads = default_threads()) {
    if (fs.m.size() > detail::max_forms) raise(errc::invariant_violation, "too many forms");
    detail::PrefixSpace ps(fs.p, fs.dim);
    std::atomic<u64> total{0};
    detail::run_chunks(ps.total(), threads, [&](u64, u64 b, u64 e) {
        u64 c = 0;
        detail::sweep(fs, ps, b, e, [&](const u64*) { ++c; return true; });
        total += c;
    });
    return total;
}

/// Common zeros in enumeration order, at most `limit` of them.
inline std::vector<std::vector<u64>> collect_projective(const FormSystem& fs, std::size_t limit,
                                                        unsigned threads = default_threads()) {
    if (fs.m.size() > detail::max_forms) raise(errc::invariant_violation, "too many forms");
    detail::PrefixSpace ps(fs.p, fs.dim);
    std::mutex mu;
    std::vector<std::pair<u64, std::vector<std::vector<u64>>>> parts;
    detail::run_chunks(ps.total(), threads, [&](u64 chunk, u64 b, u64 e) {
        std::vector<std::vector<u64>> pts;
        detail::sweep(fs, ps, b, e, [&](const u64* x) {
            pts.emplace_back(x, x + fs.dim);
            return pts.size() < limit;
        });
        std::lock_guard lock(mu);
        parts.emplace_back(chunk, std::move(pts));
    });
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<u64>> out;
    for (auto& [c, pts] : parts)
        for (auto& x : pts) {
            if (out.size() == limit) return out;
            out.push_back(std::move(x));
        }
    return out;
}

/// First common zero in enumeration order satisfying pred.
template <class Pred>
std::optional<std::vector<u64>> find_projective(const FormSystem& fs, Pred&& pred, unsigned threads = default_threads()) {
    detail::PrefixSpace ps(fs.p, fs.dim);
    std::atomic<u64> best{std::numeric_limits<u64>::max()};
    std::mutex mu;
    std::optional<std::vector<u64>> found;
    detail::run_chunks(ps.total(), threads, [&](u64 chunk, u64 b, u64 e) {
        if (chunk > best.load()) return;
        std::optional<std::vector<u64>> hit;
        detail::sweep(fs, ps, b, e, [&](const u64* x) {
            if (chunk > best.load()) return false;
            std::vector<u64> v(x, x + fs.dim);
            if (!pred(v)) return true;
            hit = std::move(v);
            return false;
        });
        if (!hit) return;
        std::lock_guard lock(mu);
        if (chunk < best.load()) {
            best = chunk;
            found = std::move(hit);
        }
    });
    return found;
}

/// Rank of a matrix over F_p.
inline std::size_t rank_mod_p(Matrix<FpElem> a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        const FpElem inv = a(r, c).inverse();
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const FpElem t = a(i, c) * inv;
            if (t.is_zero()) continue;
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= t * a(r, j);
        }
        ++r;
    }
    return r;
}

/// Basis (as columns of an n x d matrix) of the common kernel of `rows`,
/// with pivots taken from the rightmost columns so the leading coordinates stay free.
inline Matrix<FpElem> kernel_basis(std::vector<std::vector<FpElem>> rows, std::size_t n, u64 p) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = n; c-- > 0 && r < rows.size();) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const FpElem inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const FpElem t = rows[i][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= t * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free.push_back(c);
    Matrix<FpElem> basis(n, free.size(), FpElem(0, p));
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = FpElem(1, p);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) basis(pivot_col[i], k) = -rows[i][free[k]];
    }
    return basis;
}

/// B^T M B
inline Matrix<FpElem> restrict_form(const Matrix<FpElem>& m, const Matrix<FpElem>& basis) {
    return basis.transpose() * m * basis;
}

} // namespace g2desc
