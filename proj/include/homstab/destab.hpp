#pragma once

// Semi-simplicial sets of destabilizations.  The p-simplices over degree n
// are the cosets Aut(n)/Aut(n-p-1), the subgroup embedded on the first
// n-p-1 strands; the i-th face composes a representative with the inverse
// braiding twist cycling positions n-p .. n-p+i and drops one subgroup
// level.  Representatives are canonicalized to the least element under the
// family's key ordering, so builds are deterministic.

#include <homstab/stabmod.hpp>

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace homstab {

struct SemiSimplicialSet {
    int top = -1;  // highest degree carrying simplices; -1 when empty
    bool augmented = false;
    std::vector<std::vector<std::string>> simplices;   // labels, degree p
    std::vector<std::vector<std::vector<int>>> faces;  // faces[p][i][idx], p >= 1

    int count(int p) const {
        return (p >= 0 && p <= top) ? (int)simplices[p].size() : 0;
    }
};

inline int face(const SemiSimplicialSet& s, int p, int i, int idx) {
    if (p < 1 || p > s.top) throw std::out_of_range("face: degree out of range");
    if (i < 0 || i > p) throw std::out_of_range("face: index out of range");
    if (idx < 0 || idx >= s.count(p)) throw std::out_of_range("face: simplex out of range");
    return s.faces[p][i][idx];
}

inline bool check_face_identities(const SemiSimplicialSet& s) {
    for (int p = 2; p <= s.top; ++p)
        for (int j = 1; j <= p; ++j)
            for (int i = 0; i < j; ++i)
                for (int idx = 0; idx < s.count(p); ++idx)
                    if (face(s, p - 1, i, face(s, p, j, idx)) !=
                        face(s, p - 1, j - 1, face(s, p, i, idx)))
                        return false;
    return true;
}

// Build product of the complex and the canonical representative elements,
// kept for tests that recompute faces from scratch.
template <class F>
struct BuiltWrw {
    SemiSimplicialSet sss;
    std::vector<std::vector<typename F::Elem>> reps;  // per degree p
};

namespace detail {

// canonical key of the coset g * emb(Aut(sub)): least key over the orbit
template <class F>
std::string coset_key(const F& fam, int n, const typename F::Elem& g,
                      const std::vector<typename F::Elem>& subgroup) {
    std::string best;
    bool first = true;
    for (const auto& h : subgroup) {
        std::string k = fam.key(n, fam.mul(n, g, h));
        if (first || k < best) {
            best = std::move(k);
            first = false;
        }
    }
    return best;
}

}  // namespace detail

// The semi-simplicial set of destabilizations over degree n, through
// simplex degree p_max (clamped to n-1; pass -1 for the default).  The
// rep_shuffle hook replaces each canonical representative by a random
// member of its coset before faces are computed; face tables must not
// depend on it.
template <class F>
BuiltWrw<F> build_wrw_detailed(const F& fam, int n, int p_max = -1,
                               std::mt19937* rep_shuffle = nullptr) {
    if (n < 0) throw std::invalid_argument("negative degree");
    if (p_max < 0 || p_max > n - 1) p_max = n - 1;
    BuiltWrw<F> out;
    out.sss.top = p_max;
    if (p_max < 0) return out;
    if (!fam.enumerable(n))
        throw std::domain_error("infinite-coset: cannot enumerate Aut at degree " + std::to_string(n));

    auto ambient = fam.elements(n);
    std::vector<std::vector<typename F::Elem>> embedded(p_max + 1);
    for (int p = 0; p <= p_max; ++p) {
        int sub = n - p - 1;
        embedded[p].clear();
        for (const auto& h : fam.elements(sub)) embedded[p].push_back(fam.embed(h, n));
    }

    out.sss.simplices.resize(p_max + 1);
    out.sss.faces.resize(p_max + 1);
    out.reps.resize(p_max + 1);
    std::vector<std::map<std::string, int>> index(p_max + 1);

    for (int p = 0; p <= p_max; ++p) {
        std::map<std::string, typename F::Elem> canon;
        for (const auto& g : ambient) {
            std::string k = detail::coset_key(fam, n, g, embedded[p]);
            auto it = canon.find(k);
            if (it == canon.end() || fam.key(n, g) < fam.key(n, it->second))
                canon.insert_or_assign(k, g);
        }
        for (auto& [k, rep] : canon) {
            index[p][k] = (int)out.sss.simplices[p].size();
            out.sss.simplices[p].push_back(k);
            out.reps[p].push_back(rep);
        }
    }

    for (int p = 1; p <= p_max; ++p) {
        out.sss.faces[p].assign(p + 1, std::vector<int>(out.sss.simplices[p].size()));
        for (int idx = 0; idx < (int)out.sss.simplices[p].size(); ++idx) {
            auto rep = out.reps[p][idx];
            if (rep_shuffle) {
                std::uniform_int_distribution<size_t> pick(0, embedded[p].size() - 1);
                rep = fam.mul(n, rep, embedded[p][pick(*rep_shuffle)]);
            }
            for (int i = 0; i <= p; ++i) {
                auto v = fam.mul(n, rep, fam.face_twist(n, n - p - 1, i));
                std::string k = detail::coset_key(fam, n, v, embedded[p - 1]);
                out.sss.faces[p][i][idx] = index[p - 1].at(k);
            }
        }
    }
    return out;
}

template <class F>
SemiSimplicialSet build_wrw(const F& fam, int n, int p_max = -1) {
    return build_wrw_detailed(fam, n, p_max).sss;
}

}  // namespace homstab
