#pragma once

// Morphisms of the stabilized braid category UB.  A morphism [q] -> [p] is a
// coset b·B_{p-q} in B_{p+1} where the parabolic acts on the first p-q
// strands; composition inserts trivial strands, and following the last q+1
// strands backwards through the braid gives an injection that only depends
// on the coset.

#include <homstab/braid.hpp>
#include <homstab/perm.hpp>

#include <stdexcept>
#include <vector>

namespace homstab {

struct UBMorphism {
    int source = 0;  // q
    int target = 0;  // p
    BraidWord rep;   // element of B_{p+1}

    UBMorphism(int q, int p, BraidWord b) : source(q), target(p), rep(std::move(b)) {
        if (q < 0 || p < q) throw std::invalid_argument("ub morphism needs 0 <= source <= target");
        if (rep.strands != p + 1) throw std::invalid_argument("ub representative must live in B_{p+1}");
    }
    static UBMorphism identity(int p) { return UBMorphism(p, p, BraidWord::id(p + 1)); }
};

inline bool ub_equal(const UBMorphism& f, const UBMorphism& g) {
    if (f.source != g.source || f.target != g.target) return false;
    return parabolic_coset_equal(f.rep, g.rep, f.target + 1, f.target - f.source);
}

// f: [l] -> [q] followed by g: [q] -> [p].
inline UBMorphism ub_compose(const UBMorphism& f, const UBMorphism& g) {
    if (f.target != g.source) throw std::invalid_argument("ub compose: degree mismatch");
    int p = g.target, q = g.source;
    BraidWord lifted = braid_shift(f.rep, p - q);  // trivial strands in front
    return UBMorphism(f.source, p, braid_concat(g.rep, lifted));
}

// A partially defined injection {1..src} -> {1..tgt}; img[t-1] = 0 marks t
// as outside the domain.
struct PartialInjection {
    int src = 0, tgt = 0;
    std::vector<int> img;

    PartialInjection(int s, int t) : src(s), tgt(t), img(s, 0) {}
    PartialInjection(int s, int t, std::vector<int> m) : src(s), tgt(t), img(std::move(m)) {
        if ((int)img.size() != s) throw std::invalid_argument("injection image size mismatch");
    }
    int operator()(int t) const { return img[t - 1]; }  // 1-based
    bool total() const {
        for (int v : img)
            if (v == 0) return false;
        return true;
    }
    bool valid() const {
        std::vector<char> seen(tgt + 1, 0);
        for (int v : img) {
            if (v < 0 || v > tgt) return false;
            if (v != 0 && seen[v]++) return false;
        }
        return true;
    }
    bool operator==(const PartialInjection& o) const {
        return src == o.src && tgt == o.tgt && img == o.img;
    }
};

// u: {1..a} -> {1..b} followed by v: {1..b} -> {1..c}.
inline PartialInjection inj_compose(const PartialInjection& u, const PartialInjection& v) {
    if (u.tgt != v.src) throw std::invalid_argument("injection compose: size mismatch");
    PartialInjection w(u.src, v.tgt);
    for (int t = 1; t <= u.src; ++t) {
        int m = u(t);
        w.img[t - 1] = m == 0 ? 0 : v(m);
    }
    return w;
}

// The injection {1..q+1} -> {1..p+1} tracking the last q+1 strands against
// the word direction; right multiplication by the parabolic fixes those
// positions, so the result is coset-independent.
inline PartialInjection ub_to_fi(const UBMorphism& f) {
    int q = f.source, p = f.target;
    Perm inv = permutation_of(f.rep).inverse();
    PartialInjection out(q + 1, p + 1);
    for (int t = 1; t <= q + 1; ++t) out.img[t - 1] = inv(t + (p - q) - 1) + 1;
    return out;
}

// Section of the i-th coface: the class of the inverse braiding placed on
// the first i+1 strands, with word sigma_i^-1 ... sigma_1^-1.  Its induced
// injection is the order-preserving map [p-1] -> [p] omitting vertex i.
inline UBMorphism delta_section(int p, int i) {
    if (p < 1 || i < 0 || i > p) throw std::invalid_argument("delta_section needs p >= 1, 0 <= i <= p");
    Word w;
    for (int k = i; k >= 1; --k) w.push_back(-k);
    return UBMorphism(p - 1, p, BraidWord(p + 1, w));
}

}  // namespace homstab
