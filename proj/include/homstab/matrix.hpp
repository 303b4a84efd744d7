#pragma once

// Dense exact linear algebra over a field (Q or Q(t)).  Everything here is
// plain Gauss elimination; fields are exact so there is no pivoting subtlety.

#include <cassert>
#include <optional>
#include <vector>

namespace homstab {

template <class K>
struct Mat {
    int r = 0, c = 0;
    std::vector<K> a;

    Mat() = default;
    Mat(int rows, int cols) : r(rows), c(cols), a((size_t)rows * cols, K(0)) {}

    K& operator()(int i, int j) { return a[(size_t)i * c + j]; }
    const K& operator()(int i, int j) const { return a[(size_t)i * c + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.r == y.r && x.c == y.c && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.c == y.r);
        Mat z(x.r, y.c);
        for (int i = 0; i < x.r; ++i)
            for (int k = 0; k < x.c; ++k) {
                const K& v = x(i, k);
                if (v == K(0)) continue;
                for (int j = 0; j < y.c; ++j) z(i, j) += v * y(k, j);
            }
        return z;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        assert(x.r == y.r && x.c == y.c);
        Mat z = x;
        for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
        return z;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        assert(x.r == y.r && x.c == y.c);
        Mat z = x;
        for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
        return z;
    }

    Mat transpose() const {
        Mat t(c, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat col(int j) const {
        Mat v(r, 1);
        for (int i = 0; i < r; ++i) v(i, 0) = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const K& x : a)
            if (!(x == K(0))) return false;
        return true;
    }
};

template <class K>
Mat<K> hcat(const Mat<K>& x, const Mat<K>& y) {
    assert(x.r == y.r);
    Mat<K> z(x.r, x.c + y.c);
    for (int i = 0; i < x.r; ++i) {
        for (int j = 0; j < x.c; ++j) z(i, j) = x(i, j);
        for (int j = 0; j < y.c; ++j) z(i, x.c + j) = y(i, j);
    }
    return z;
}

template <class K>
Mat<K> vcat(const Mat<K>& x, const Mat<K>& y) {
    assert(x.c == y.c);
    Mat<K> z(x.r + y.r, x.c);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.c; ++j) z(i, j) = x(i, j);
    for (int i = 0; i < y.r; ++i)
        for (int j = 0; j < x.c; ++j) z(x.r + i, j) = y(i, j);
    return z;
}

// In-place reduced row echelon form; returns rank, records pivot columns.
template <class K>
int rref(Mat<K>& m, std::vector<int>* pivots = nullptr) {
    int rank = 0;
    for (int j = 0; j < m.c && rank < m.r; ++j) {
        int p = -1;
        for (int i = rank; i < m.r; ++i)
            if (!(m(i, j) == K(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != rank)
            for (int t = 0; t < m.c; ++t) std::swap(m(p, t), m(rank, t));
        K inv = K(1) / m(rank, j);
        for (int t = j; t < m.c; ++t) m(rank, t) = m(rank, t) * inv;
        for (int i = 0; i < m.r; ++i) {
            if (i == rank || m(i, j) == K(0)) continue;
            K f = m(i, j);
            for (int t = j; t < m.c; ++t) m(i, t) = m(i, t) - f * m(rank, t);
        }
        if (pivots) pivots->push_back(j);
        ++rank;
    }
    return rank;
}

template <class K>
int rank_of(Mat<K> m) {
    return rref(m);
}

// Columns form a basis of the null space of m.
template <class K>
Mat<K> kernel_basis(Mat<K> m) {
    std::vector<int> piv;
    int rank = rref(m, &piv);
    std::vector<int> is_piv(m.c, -1);
    for (int i = 0; i < rank; ++i) is_piv[piv[i]] = i;
    Mat<K> ker(m.c, m.c - rank);
    int k = 0;
    for (int j = 0; j < m.c; ++j) {
        if (is_piv[j] >= 0) continue;
        ker(j, k) = K(1);
        for (int i = 0; i < rank; ++i) ker(piv[i], k) = K(0) - m(i, j);
        ++k;
    }
    return ker;
}

// Columns of m at pivot positions: a basis of the column space.
template <class K>
Mat<K> image_basis(const Mat<K>& m) {
    Mat<K> w = m;
    std::vector<int> piv;
    rref(w, &piv);
    Mat<K> im(m.r, (int)piv.size());
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < m.r; ++i) im(i, (int)k) = m(i, piv[k]);
    return im;
}

// Solve A X = B exactly; nullopt when inconsistent.
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& A, const Mat<K>& B) {
    assert(A.r == B.r);
    Mat<K> w = hcat(A, B);
    std::vector<int> piv;
    rref(w, &piv);
    for (size_t k = 0; k < piv.size(); ++k)
        if (piv[k] >= A.c) return std::nullopt;  // pivot in the RHS block
    Mat<K> X(A.c, B.c);
    for (size_t k = 0; k < piv.size(); ++k)
        for (int j = 0; j < B.c; ++j) X(piv[k], j) = w((int)k, A.c + j);
    return X;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& A) {
    assert(A.r == A.c);
    auto X = solve(A, Mat<K>::identity(A.r));
    if (X && (A * *X == Mat<K>::identity(A.r))) return X;
    return std::nullopt;
}

// Incremental echelon store for span membership and basis extension.
template <class K>
struct EchelonSpan {
    int n;
    std::vector<std::vector<K>> rows;  // reduced, one leading 1 per row
    std::vector<int> lead;

    explicit EchelonSpan(int dim) : n(dim) {}

    int dim() const { return (int)rows.size(); }

    // Reduce v against the store; returns the residue.
    std::vector<K> reduce(std::vector<K> v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            const K& f = v[lead[i]];
            if (f == K(0)) continue;
            K g = f;
            for (int j = 0; j < n; ++j) v[j] = v[j] - g * rows[i][j];
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const {
        auto r = reduce(v);
        for (const K& x : r)
            if (!(x == K(0))) return false;
        return true;
    }

    // Returns true when v enlarged the span.
    bool insert(const std::vector<K>& v) {
        auto r = reduce(v);
        int l = -1;
        for (int j = 0; j < n; ++j)
            if (!(r[j] == K(0))) {
                l = j;
                break;
            }
        if (l < 0) return false;
        K inv = K(1) / r[l];
        for (int j = 0; j < n; ++j) r[j] = r[j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            K f = rows[i][l];
            if (f == K(0)) continue;
            for (int j = 0; j < n; ++j) rows[i][j] = rows[i][j] - f * r[j];
        }
        rows.push_back(std::move(r));
        lead.push_back(l);
        return true;
    }

    void insert_cols(const Mat<K>& m) {
        for (int j = 0; j < m.c; ++j) {
            std::vector<K> v(n);
            for (int i = 0; i < n; ++i) v[i] = m(i, j);
            insert(v);
        }
    }
};

// Standard-basis columns extending span(B) to all of K^n.
template <class K>
Mat<K> complement_basis(const Mat<K>& B, int n) {
    EchelonSpan<K> sp(n);
    sp.insert_cols(B);
    std::vector<int> picked;
    for (int i = 0; i < n && sp.dim() < n; ++i) {
        std::vector<K> e(n, K(0));
        e[i] = K(1);
        if (sp.insert(e)) picked.push_back(i);
    }
    Mat<K> C(n, (int)picked.size());
    for (size_t k = 0; k < picked.size(); ++k) C(picked[k], (int)k) = K(1);
    return C;
}

template <class K>
bool subspace_leq(const Mat<K>& A, const Mat<K>& B) {
    assert(A.r == B.r);
    EchelonSpan<K> sp(B.r);
    sp.insert_cols(B);
    for (int j = 0; j < A.c; ++j) {
        std::vector<K> v(A.r);
        for (int i = 0; i < A.r; ++i) v[i] = A(i, j);
        if (!sp.contains(v)) return false;
    }
    return true;
}

template <class K>
bool subspace_eq(const Mat<K>& A, const Mat<K>& B) {
    return subspace_leq(A, B) && subspace_leq(B, A);
}

}  // namespace homstab
