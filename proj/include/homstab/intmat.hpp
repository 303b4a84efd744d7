#pragma once

// Integer matrices and Smith normal form with unimodular transforms.
// Pivots are chosen by least absolute value with a minimum-fill tie break,
// and quotients use nearest-integer division; both measures keep entry
// growth tame on the sparse incidence matrices this library feeds in.  A
// checked int64 fast path covers the common case and falls back to
// arbitrary precision on overflow.

#include <homstab/matrix.hpp>
#include <homstab/rat.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace homstab {

struct SnfResult {
    std::vector<Int> diag;  // d1 | d2 | ..., nonnegative, zeros trailing
    std::optional<Mat<Int>> U, V;

    int rank() const {
        int k = 0;
        for (const Int& d : diag)
            if (d != 0) ++k;
        return k;
    }
    std::vector<Int> torsion() const {
        std::vector<Int> t;
        for (const Int& d : diag)
            if (d > 1) t.push_back(d);
        return t;
    }
};

namespace detail {

inline long long chk_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("snf i64");
    return r;
}
inline long long chk_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("snf i64");
    return r;
}
inline long long chk_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("snf i64");
    return r;
}
inline long long chk_neg(long long a) { return chk_sub(0, a); }

template <class T>
T ring_sub_mul(const T& x, const T& q, const T& y) {
    if constexpr (std::is_same_v<T, long long>)
        return chk_sub(x, chk_mul(q, y));
    else
        return x - q * y;
}

template <class T>
T abs_val(const T& x) {
    if constexpr (std::is_same_v<T, long long>)
        return x < 0 ? chk_neg(x) : x;
    else
        return x < 0 ? T(-x) : x;
}

// Core elimination on a row-major buffer.  U, V optional (Int only).
template <class T>
std::vector<T> snf_core(std::vector<T> a, int r, int c, Mat<Int>* U, Mat<Int>* V) {
    auto at = [&](int i, int j) -> T& { return a[(size_t)i * c + j]; };
    auto swap_rows = [&](int i, int k) {
        for (int j = 0; j < c; ++j) std::swap(at(i, j), at(k, j));
        if (U)
            for (int j = 0; j < U->c; ++j) std::swap((*U)(i, j), (*U)(k, j));
    };
    auto swap_cols = [&](int j, int k) {
        for (int i = 0; i < r; ++i) std::swap(at(i, j), at(i, k));
        if (V)
            for (int i = 0; i < V->r; ++i) std::swap((*V)(i, j), (*V)(i, k));
    };
    auto row_sub = [&](int i, const T& q, int k) {  // row i -= q * row k
        for (int j = 0; j < c; ++j) at(i, j) = ring_sub_mul(at(i, j), q, at(k, j));
        if (U)
            for (int j = 0; j < U->c; ++j) (*U)(i, j) -= Int(q) * (*U)(k, j);
    };
    auto col_sub = [&](int j, const T& q, int k) {  // col j -= q * col k
        for (int i = 0; i < r; ++i) at(i, j) = ring_sub_mul(at(i, j), q, at(i, k));
        if (V)
            for (int i = 0; i < V->r; ++i) (*V)(i, j) -= Int(q) * (*V)(i, k);
    };
    auto row_add = [&](int i, int k) {  // row i += row k
        for (int j = 0; j < c; ++j) {
            if constexpr (std::is_same_v<T, long long>)
                at(i, j) = chk_add(at(i, j), at(k, j));
            else
                at(i, j) += at(k, j);
        }
        if (U)
            for (int j = 0; j < U->c; ++j) (*U)(i, j) += (*U)(k, j);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < c; ++j) {
            if constexpr (std::is_same_v<T, long long>)
                at(i, j) = chk_neg(at(i, j));
            else
                at(i, j) = -at(i, j);
        }
        if (U)
            for (int j = 0; j < U->c; ++j) (*U)(i, j) = -(*U)(i, j);
    };
    // Quotient of nearest-integer division: |x - q*y| <= |y| / 2.
    auto divide = [&](const T& x, const T& y) -> T {
        T q;
        if constexpr (std::is_same_v<T, long long>) {
            if (y == -1) return chk_neg(x);
            q = x / y;
            T rem = chk_sub(x, chk_mul(q, y));
            if (chk_mul(2, abs_val(rem)) > abs_val(y)) q = chk_add(q, (x < 0) == (y < 0) ? 1 : -1);
        } else {
            q = x / y;
            T rem = x - q * y;
            if (2 * abs_val(rem) > abs_val(y)) q += (x < 0) == (y < 0) ? 1 : -1;
        }
        return q;
    };

    std::vector<int> row_nnz(r), col_nnz(c);
    int t = 0;
    int bound = std::min(r, c);
    while (t < bound) {
        // least |.| nonzero pivot in the trailing submatrix; ties go to the
        // entry with the fewest other nonzeros in its row and column
        for (int i = t; i < r; ++i) row_nnz[i] = 0;
        for (int j = t; j < c; ++j) col_nnz[j] = 0;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (at(i, j) != T(0)) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
        int pi = -1, pj = -1;
        T best{};
        long best_fill = 0;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (at(i, j) == T(0)) continue;
                T v = abs_val(at(i, j));
                long fill = (long)(row_nnz[i] - 1) * (col_nnz[j] - 1);
                if (pi < 0 || v < best || (v == best && fill < best_fill)) {
                    best = v;
                    best_fill = fill;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < r; ++i) {
                if (at(i, t) == T(0)) continue;
                T q = divide(at(i, t), at(t, t));
                row_sub(i, q, t);
                if (at(i, t) != T(0)) {
                    swap_rows(i, t);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (int j = t + 1; j < c; ++j) {
                if (at(t, j) == T(0)) continue;
                T q = divide(at(t, j), at(t, t));
                col_sub(j, q, t);
                if (at(t, j) != T(0)) {
                    swap_cols(j, t);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            // divisibility: pivot must divide every remaining entry
            for (int i = t + 1; i < r && !again; ++i)
                for (int j = t + 1; j < c && !again; ++j)
                    if (at(i, j) % at(t, t) != T(0)) {
                        row_add(t, i);
                        again = true;
                    }
        }
        if (at(t, t) < T(0)) negate_row(t);
        ++t;
    }
    return a;
}

}  // namespace detail

inline SnfResult smith_normal_form(const Mat<Int>& m, bool with_transforms = false) {
    SnfResult res;
    int bound = std::min(m.r, m.c);
    if (!with_transforms) {
        // int64 fast path when entries are comfortably small
        bool small = true;
        for (const Int& x : m.a)
            if (x > std::numeric_limits<int32_t>::max() || x < std::numeric_limits<int32_t>::min()) {
                small = false;
                break;
            }
        if (small) {
            try {
                std::vector<long long> buf(m.a.size());
                for (size_t i = 0; i < m.a.size(); ++i) buf[i] = (long long)m.a[i];
                auto d = detail::snf_core<long long>(std::move(buf), m.r, m.c, nullptr, nullptr);
                res.diag.resize(bound);
                for (int i = 0; i < bound; ++i) res.diag[i] = d[(size_t)i * m.c + i];
                return res;
            } catch (const std::overflow_error&) {
                // fall through to the exact path
            }
        }
        auto d = detail::snf_core<Int>(m.a, m.r, m.c, nullptr, nullptr);
        res.diag.resize(bound);
        for (int i = 0; i < bound; ++i) res.diag[i] = d[(size_t)i * m.c + i];
        return res;
    }
    Mat<Int> U = Mat<Int>::identity(m.r), V = Mat<Int>::identity(m.c);
    auto d = detail::snf_core<Int>(m.a, m.r, m.c, &U, &V);
    res.diag.resize(bound);
    for (int i = 0; i < bound; ++i) res.diag[i] = d[(size_t)i * m.c + i];
    res.U = std::move(U);
    res.V = std::move(V);
    return res;
}

// Exact determinant (Bareiss), used to certify transform unimodularity.
inline Int bareiss_det(Mat<Int> m) {
    assert(m.r == m.c);
    int n = m.r;
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace homstab
