#pragma once

// Integer chain complexes built from semi-simplicial sets.  Boundaries are
// alternating sums of faces; homology comes out of Smith normal form, so
// free ranks and torsion are both exact.

#include <homstab/destab.hpp>
#include <homstab/intmat.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homstab {

struct ChainComplex {
    int top = -1;
    bool reduced = false;
    std::vector<int> ranks;          // ranks[p] = rank of C_p
    std::vector<Mat<Int>> boundary;  // boundary[p] maps C_p to C_{p-1}; at p = 0
                                     // this is the augmentation row (or empty)
};

inline ChainComplex boundary_from_sss(const SemiSimplicialSet& s, bool reduced) {
    ChainComplex c;
    c.top = s.top;
    c.reduced = reduced;
    if (s.top < 0) return c;
    c.ranks.resize(s.top + 1);
    for (int p = 0; p <= s.top; ++p) c.ranks[p] = s.count(p);
    c.boundary.resize(s.top + 1);
    c.boundary[0] = Mat<Int>(reduced ? 1 : 0, c.ranks[0]);
    if (reduced)
        for (int j = 0; j < c.ranks[0]; ++j) c.boundary[0](0, j) = 1;
    for (int p = 1; p <= s.top; ++p) {
        Mat<Int> d(c.ranks[p - 1], c.ranks[p]);
        for (int idx = 0; idx < c.ranks[p]; ++idx)
            for (int i = 0; i <= p; ++i) d(face(s, p, i, idx), idx) += (i % 2 == 0 ? 1 : -1);
        c.boundary[p] = std::move(d);
    }
    return c;
}

struct HomologyGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // elementary divisors > 1, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Homology of the complex as given, indexed by degree 0..top; with the
// augmentation row present this is reduced homology.
inline std::vector<HomologyGroup> reduced_homology(const ChainComplex& c) {
    if (c.top < 0) return {};
    std::vector<int> bd_rank(c.top + 2, 0);
    std::vector<std::vector<Int>> bd_torsion(c.top + 2);
    for (int p = 0; p <= c.top; ++p) {
        if (p >= 1 && !(c.boundary[p - 1] * c.boundary[p]).is_zero())
            throw std::invalid_argument("homology: boundary squared is nonzero at degree " +
                                        std::to_string(p));
        SnfResult snf = smith_normal_form(c.boundary[p]);
        bd_rank[p] = snf.rank();
        bd_torsion[p] = snf.torsion();
    }
    std::vector<HomologyGroup> out(c.top + 1);
    for (int p = 0; p <= c.top; ++p) {
        out[p].free_rank = c.ranks[p] - bd_rank[p] - bd_rank[p + 1];
        out[p].torsion = std::move(bd_torsion[p + 1]);
    }
    return out;
}

inline std::vector<HomologyGroup> reduced_homology(const SemiSimplicialSet& s) {
    return reduced_homology(boundary_from_sss(s, true));
}

// Marker for "every reduced homology group vanishes".
inline constexpr int connectivity_infinite = std::numeric_limits<int>::max();

// Largest c such that reduced homology vanishes in all degrees <= c; -1 when
// already nonzero in degree 0, -2 for the empty set.
inline int homological_connectivity(const SemiSimplicialSet& s) {
    if (s.top < 0) return -2;
    std::vector<HomologyGroup> h = reduced_homology(s);
    for (int p = 0; p <= s.top; ++p)
        if (!h[p].trivial()) return p - 1;
    return connectivity_infinite;
}

inline std::string connectivity_str(int c) {
    return c == connectivity_infinite ? std::string("inf") : std::to_string(c);
}

struct ConnectivityVerdict {
    int n = 0;
    int connectivity = 0;
    int required = 0;  // floor((n - a) / k) - 1
    bool pass = false;
};

// Tests homological connectivity against the line floor((n - a) / k) - 1 on
// the window m <= n <= n_max; family maps n to its semi-simplicial set.
template <class FamilyFn>
std::vector<ConnectivityVerdict> check_graded_connectivity(FamilyFn&& family, int k, int a, int m,
                                                           int n_max) {
    if (k <= 0) throw std::invalid_argument("graded connectivity: slope must be positive");
    std::vector<ConnectivityVerdict> out;
    for (int n = m; n <= n_max; ++n) {
        ConnectivityVerdict v;
        v.n = n;
        v.connectivity = homological_connectivity(family(n));
        v.required = (int)floor_div((long long)n - a, (long long)k) - 1;
        v.pass = v.connectivity >= v.required;
        out.push_back(v);
    }
    return out;
}

// Alternating sum of simplex counts, with the empty simplex counted once.
inline long long reduced_euler(const SemiSimplicialSet& s) {
    long long chi = -1;
    for (int p = 0; p <= s.top; ++p) chi += (p % 2 == 0 ? 1LL : -1LL) * s.count(p);
    return chi;
}

}  // namespace homstab
