#pragma once

// Permutations of {0..n-1} in one-line form.  Composition is left first:
// (u then v)(x) = v(u(x)), matching the word conventions used everywhere.

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

namespace homstab {

struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}

    static Perm identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return Perm(v);
    }
    // Adjacent transposition (i, i+1), 0-based i.
    static Perm transposition(int n, int i) {
        Perm p = identity(n);
        std::swap(p.img[i], p.img[i + 1]);
        return p;
    }

    int n() const { return (int)img.size(); }
    int operator()(int x) const { return img[x]; }

    // Apply *this first, then q.
    Perm then(const Perm& q) const {
        assert(n() == q.n());
        std::vector<int> v(img.size());
        for (int x = 0; x < n(); ++x) v[x] = q.img[img[x]];
        return Perm(v);
    }

    Perm inverse() const {
        std::vector<int> v(img.size());
        for (int x = 0; x < n(); ++x) v[img[x]] = x;
        return Perm(v);
    }

    bool is_identity() const {
        for (int x = 0; x < n(); ++x)
            if (img[x] != x) return false;
        return true;
    }

    // Identity on added trailing points.
    Perm extended(int m) const {
        assert(m >= n());
        std::vector<int> v(m);
        for (int x = 0; x < n(); ++x) v[x] = img[x];
        for (int x = n(); x < m; ++x) v[x] = x;
        return Perm(v);
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img != b.img; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }

    std::string str() const {  // one-line form, 1-based for output
        std::string s = "[";
        for (int x = 0; x < n(); ++x) {
            if (x) s += " ";
            s += std::to_string(img[x] + 1);
        }
        return s + "]";
    }
};

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline std::vector<int> cycle_type(const Perm& p) {  // parts sorted descending
    std::vector<bool> seen(p.n(), false);
    std::vector<int> parts;
    for (int x = 0; x < p.n(); ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = p(y);
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

}  // namespace homstab
