#pragma once

// Partitions, Specht modules in Young's seminormal form, Murnaghan-Nakayama
// characters, and the multiplicity pipeline tying symmetric-group modules to
// twisted braid homology.

#include <homstab/foxhom.hpp>
#include <homstab/matrix.hpp>
#include <homstab/rat.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace homstab {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
    }

    int weight() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int first() const { return parts.empty() ? 0 : parts[0]; }
    int rows() const { return (int)parts.size(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// (n - |lambda|, lambda_1, ..., lambda_k), defined once n - |lambda| can sit
// on top as a largest part.
inline Partition pad(const Partition& lam, int n) {
    if (n < lam.weight() + lam.first())
        throw std::invalid_argument("pad: need n >= |lambda| + lambda_1");
    if (n == 0) return Partition{};
    std::vector<int> parts = {n - lam.weight()};
    parts.insert(parts.end(), lam.parts.begin(), lam.parts.end());
    return Partition(std::move(parts));
}

namespace detail {

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

inline long long hook_dim(const Partition& lam) {
    int n = lam.weight();
    std::vector<int> conj(lam.first(), 0);  // column lengths
    for (int p : lam.parts)
        for (int j = 0; j < p; ++j) conj[j]++;
    Int hooks = 1;
    for (int i = 0; i < lam.rows(); ++i)
        for (int j = 0; j < lam.parts[i]; ++j)
            hooks *= (lam.parts[i] - j) + (conj[j] - i) - 1;
    Int dim = detail::factorial(n) / hooks;
    return (long long)dim;
}

namespace detail {

using Tableau = std::vector<std::vector<int>>;

inline void tableaux_rec(const std::vector<int>& shape, Tableau& t, std::vector<int>& fill, int v,
                         int n, std::vector<Tableau>& out) {
    if (v > n) {
        out.push_back(t);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        if (fill[r] >= shape[r]) continue;
        if (r > 0 && fill[r - 1] <= fill[r]) continue;
        t[r].push_back(v);
        fill[r]++;
        tableaux_rec(shape, t, fill, v + 1, n, out);
        t[r].pop_back();
        fill[r]--;
    }
}

}  // namespace detail

inline std::vector<detail::Tableau> standard_tableaux(const Partition& lam) {
    detail::Tableau t(lam.rows());
    std::vector<int> fill(lam.rows(), 0);
    std::vector<detail::Tableau> out;
    detail::tableaux_rec(lam.parts, t, fill, 1, lam.weight(), out);
    return out;
}

// Matrices of the adjacent transpositions s_1..s_{n-1} on the Specht module,
// in Young's seminormal form: with d the content distance from i to i+1 in a
// tableau, the diagonal coefficient is 1/d, and of the two tableaux swapped
// by s_i the one with d > 0 hands its partner coefficient 1, the other
// 1 - 1/d^2.  Exact over Q.
inline std::vector<Mat<Rat>> seminormal_matrices(const Partition& lam) {
    int n = lam.weight();
    std::vector<detail::Tableau> tabs = standard_tableaux(lam);
    int f = (int)tabs.size();
    std::map<detail::Tableau, int> index;
    for (int i = 0; i < f; ++i) index[tabs[i]] = i;
    auto locate = [](const detail::Tableau& t, int v, int& row, int& col) {
        for (size_t r = 0; r < t.size(); ++r)
            for (size_t c = 0; c < t[r].size(); ++c)
                if (t[r][c] == v) {
                    row = (int)r;
                    col = (int)c;
                    return;
                }
    };
    std::vector<Mat<Rat>> gens;
    for (int i = 1; i < n; ++i) {
        Mat<Rat> M(f, f);
        for (int a = 0; a < f; ++a) {
            int r1, c1, r2, c2;
            locate(tabs[a], i, r1, c1);
            locate(tabs[a], i + 1, r2, c2);
            if (r1 == r2) {
                M(a, a) = 1;
            } else if (c1 == c2) {
                M(a, a) = -1;
            } else {
                detail::Tableau t2 = tabs[a];
                t2[r1][c1] = i + 1;
                t2[r2][c2] = i;
                int b = index.at(t2);
                long long d = (c2 - r2) - (c1 - r1);
                Rat rd = Rat(1) / d;
                M(a, a) = rd;
                M(b, a) = d > 0 ? Rat(1) : Rat(1) - rd * rd;
            }
        }
        gens.push_back(std::move(M));
    }
    return gens;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// order of the centralizer of a permutation of cycle type mu
inline Int centralizer_order(const Partition& mu) {
    Int z = 1;
    int run = 0, prev = 0;
    for (int p : mu.parts) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= Int(p) * run;  // accumulates i^{m_i} m_i! across the run
    }
    return z;
}

// Murnaghan-Nakayama: strip the parts of mu as border strips, tracked on
// first-column hook lengths.
inline Int mn_character(const Partition& lam, const Partition& mu) {
    int n = lam.weight();
    if (n != mu.weight()) throw std::invalid_argument("character: partition sizes differ");
    std::vector<int> beta(n);  // lam_i + (n - 1 - i), ascending
    for (int i = 0; i < n; ++i) {
        int part = i < lam.rows() ? lam.parts[i] : 0;
        beta[n - 1 - i] = part + (n - 1 - i);
    }
    auto rec = [&](auto&& self, std::vector<int>& b, size_t idx) -> Int {
        if (idx == mu.parts.size()) return 1;
        int r = mu.parts[idx];
        Int total = 0;
        for (size_t t = 0; t < b.size(); ++t) {
            int target = b[t] - r;
            if (target < 0) continue;
            if (std::binary_search(b.begin(), b.end(), target)) continue;
            int crossed = 0;
            for (int x : b)
                if (target < x && x < b[t]) ++crossed;
            std::vector<int> nb = b;
            nb.erase(nb.begin() + t);
            nb.insert(std::lower_bound(nb.begin(), nb.end(), target), target);
            Int sub = self(self, nb, idx + 1);
            total += (crossed % 2 == 0) ? sub : -sub;
        }
        return total;
    };
    return rec(rec, beta, 0);
}

// Multiplicity of the padded module in the permutation module on 2-element
// subsets, by character inner product; the independent side of the pipeline.
inline int multiplicity_oracle(const Partition& lam, int n) {
    Partition padded = pad(lam, n);
    Int total = 0;
    for (const Partition& mu : partitions_of(n)) {
        Int m1 = 0, m2 = 0;
        for (int p : mu.parts) {
            if (p == 1) ++m1;
            if (p == 2) ++m2;
        }
        Int chi_perm = m1 * (m1 - 1) / 2 + m2;
        if (chi_perm == 0) continue;
        total += (detail::factorial(n) / centralizer_order(mu)) * chi_perm * mn_character(padded, mu);
    }
    Int mult = total / detail::factorial(n);
    if (mult * detail::factorial(n) != total)
        throw std::logic_error("multiplicity: inner product not integral");
    return (int)(long long)mult;
}

// The braid group acting on the padded Specht module through its permutation.
inline Representation specht_braid_rep(const Partition& lam, int n) {
    return Representation((int)hook_dim(pad(lam, n)), seminormal_matrices(pad(lam, n)));
}

// dim H_i(B_n; padded Specht module), i <= 1, via the Fox pipeline.
inline int multiplicity_h(const Partition& lam, int n, int degree) {
    return twisted_homology(braid_presentation(n), specht_braid_rep(lam, n), degree);
}

// Least n from which the multiplicities above are promised constant.
inline int stabilization_onset(const Partition& lam, int degree) {
    return 2 * (degree + lam.weight() + lam.first() + 1);
}

}  // namespace homstab
