#pragma once

// Stabilized modules: families of automorphism groups Aut(n) with a
// stabilization homomorphism appending a trivial strand, plus the object
// bookkeeping (genus, stable genus, cancellation) on top.  Three group
// families ship: symmetric, braid, and wreath products G wr Sigma_n for a
// finite G given by its multiplication table.

#include <homstab/braid.hpp>
#include <homstab/perm.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace homstab {

// --- group families ---------------------------------------------------

// Elements of Aut(n) compose left factor first via mul.  embed(a, n) lands
// Aut(k) in Aut(n) by appending trivial strands, so the image fixes the
// last n-k positions; face_twist(n, offset, i) is the element cycling
// positions offset+1 .. offset+i+1 upward by one (1-based, top wraps to the
// bottom), the shape every destabilization face composes with.

struct SymmetricFamily {
    using Elem = Perm;

    std::string name() const { return "symmetric"; }
    bool enumerable(int) const { return true; }
    std::vector<Perm> elements(int n) const { return all_perms(n); }
    Perm identity(int n) const { return Perm::identity(n); }
    Perm mul(int, const Perm& a, const Perm& b) const { return a.then(b); }
    bool equal(int, const Perm& a, const Perm& b) const { return a == b; }
    Perm stabilize(int n, const Perm& a) const { return a.extended(n + 1); }
    Perm embed(const Perm& a, int n) const { return a.extended(n); }
    Perm face_twist(int n, int offset, int i) const {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (int x = 0; x < i; ++x) img[offset + x] = offset + x + 1;
        img[offset + i] = offset;
        return Perm(img);
    }
    std::string key(int, const Perm& a) const { return a.str(); }
    std::string str(int, const Perm& a) const { return a.str(); }
    Perm random_element(int n, std::mt19937& rng) const {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        return Perm(img);
    }
};

struct BraidFamily {
    using Elem = BraidWord;

    std::string name() const { return "braid"; }
    bool enumerable(int n) const { return n <= 1; }
    std::vector<BraidWord> elements(int n) const {
        if (!enumerable(n)) throw std::domain_error("braid family is infinite at degree " + std::to_string(n));
        return {BraidWord::id(n)};
    }
    BraidWord identity(int n) const { return BraidWord::id(n); }
    BraidWord mul(int, const BraidWord& a, const BraidWord& b) const { return braid_concat(a, b); }
    bool equal(int, const BraidWord& a, const BraidWord& b) const { return braid_equal(a, b); }
    BraidWord stabilize(int, const BraidWord& a) const { return braid_pad(a, 1); }
    BraidWord embed(const BraidWord& a, int n) const { return braid_pad(a, n - a.strands); }
    BraidWord face_twist(int n, int offset, int i) const {
        Word w;
        for (int k = offset + i; k >= offset + 1; --k) w.push_back(-k);
        return BraidWord(n, w);
    }
    std::string key(int, const BraidWord& a) const { return braid_str(a); }
    std::string str(int, const BraidWord& a) const { return braid_str(a); }
    BraidWord random_element(int n, std::mt19937& rng) const {
        if (n < 2) return BraidWord::id(n);
        std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
        Word w;
        for (int k = 0; k < 12; ++k) {
            int g = gen(rng);
            w.push_back(sign(rng) ? g : -g);
        }
        return BraidWord(n, w);
    }
};

struct FiniteGroup {
    std::string name;
    int order = 1;
    std::vector<int> table;  // table[a * order + b] = ab

    int mul(int a, int b) const { return table[a * order + b]; }
    int inverse(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0) return b;
        throw std::logic_error("group element without inverse");
    }
    void validate() const {
        if (order < 1 || (int)table.size() != order * order)
            throw std::invalid_argument("group table size mismatch");
        for (int a = 0; a < order; ++a) {
            if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument("0 is not a unit");
            bool has_inverse = false;
            for (int b = 0; b < order && !has_inverse; ++b) has_inverse = mul(a, b) == 0;
            if (!has_inverse) throw std::invalid_argument("group element without inverse");
        }
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("group table not associative");
    }
};

inline FiniteGroup cyclic_group(int m) {
    FiniteGroup g;
    g.name = "z" + std::to_string(m);
    g.order = m;
    g.table.resize(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g.table[a * m + b] = (a + b) % m;
    return g;
}

inline FiniteGroup klein_four() {
    FiniteGroup g;
    g.name = "k4";
    g.order = 4;
    g.table = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
    return g;
}

// Strand x carries labels[x] and moves to pi(x); in a product the second
// factor contributes the label found at the strand's intermediate position.
struct WreathElem {
    std::vector<int> labels;
    Perm pi;

    bool operator==(const WreathElem& o) const { return labels == o.labels && pi == o.pi; }
};

struct WreathFamily {
    FiniteGroup G;

    explicit WreathFamily(FiniteGroup grp) : G(std::move(grp)) { G.validate(); }

    using Elem = WreathElem;

    std::string name() const { return "wreath-" + G.name; }
    bool enumerable(int) const { return true; }
    std::vector<WreathElem> elements(int n) const {
        std::vector<WreathElem> out;
        for (const Perm& p : all_perms(n)) {
            std::vector<int> l(n, 0);
            while (true) {
                out.push_back({l, p});
                int i = 0;
                while (i < n && l[i] == G.order - 1) l[i++] = 0;
                if (i == n) break;
                ++l[i];
            }
        }
        return out;
    }
    WreathElem identity(int n) const { return {std::vector<int>(n, 0), Perm::identity(n)}; }
    WreathElem mul(int n, const WreathElem& a, const WreathElem& b) const {
        WreathElem r{std::vector<int>(n), a.pi.then(b.pi)};
        for (int x = 0; x < n; ++x) r.labels[x] = G.mul(a.labels[x], b.labels[a.pi(x)]);
        return r;
    }
    bool equal(int, const WreathElem& a, const WreathElem& b) const { return a == b; }
    WreathElem stabilize(int n, const WreathElem& a) const {
        WreathElem r{a.labels, a.pi.extended(n + 1)};
        r.labels.push_back(0);
        return r;
    }
    WreathElem embed(const WreathElem& a, int n) const {
        WreathElem r{a.labels, a.pi.extended(n)};
        r.labels.resize(n, 0);
        return r;
    }
    WreathElem face_twist(int n, int offset, int i) const {
        return {std::vector<int>(n, 0), SymmetricFamily{}.face_twist(n, offset, i)};
    }
    std::string key(int, const WreathElem& a) const { return str(0, a); }
    std::string str(int, const WreathElem& a) const {
        std::string s = "[";
        for (size_t x = 0; x < a.labels.size(); ++x) {
            if (x) s += ",";
            s += std::to_string(a.labels[x]);
        }
        return s + "]" + a.pi.str();
    }
    WreathElem random_element(int n, std::mt19937& rng) const {
        WreathElem r{std::vector<int>(n), SymmetricFamily{}.random_element(n, rng)};
        std::uniform_int_distribution<int> lab(0, G.order - 1);
        for (int& l : r.labels) l = lab(rng);
        return r;
    }
};

// Toy family with the stabilization deliberately collapsed at degree 1;
// exists so the injectivity check has a counterexample to catch.
struct BrokenWreathFamily : WreathFamily {
    explicit BrokenWreathFamily(FiniteGroup grp) : WreathFamily(std::move(grp)) {}
    std::string name() const { return "broken-" + G.name; }
    WreathElem stabilize(int n, const WreathElem& a) const {
        if (n == 1) return {std::vector<int>(2, 0), Perm::identity(2)};
        return WreathFamily::stabilize(n, a);
    }
};

// --- object layer ------------------------------------------------------

// Finitely windowed object table: one entry per isomorphism class, the
// suspension partial map, and degrees (with an infinity marker for
// localized components).
struct ObjectTable {
    std::string name;
    struct Obj {
        std::string label;
        int degree = 0;
        bool infinite = false;
    };
    std::vector<Obj> objects;
    std::vector<int> susp;  // index of obj + X, or -1 outside the window

    int find(const std::string& label) const {
        for (size_t i = 0; i < objects.size(); ++i)
            if (objects[i].label == label) return (int)i;
        throw std::invalid_argument("unknown object: " + label);
    }
    int suspend(int idx, int times) const {
        for (int k = 0; k < times; ++k) {
            if (idx < 0) return -1;
            idx = susp[idx];
        }
        return idx;
    }
};

// One object per degree 0..n_max, suspension shifting by one.
inline ObjectTable degree_table(const std::string& name, int n_max) {
    ObjectTable t;
    t.name = name;
    for (int n = 0; n <= n_max; ++n) {
        t.objects.push_back({"X^" + std::to_string(n), n, false});
        t.susp.push_back(n < n_max ? n + 1 : -1);
    }
    return t;
}

// Objects A+X^k only; nothing below A exists, so A has genus 0.
inline ObjectTable toy_above_table(int base_degree, int n_max) {
    ObjectTable t;
    t.name = "toy-above";
    for (int k = 0; k <= n_max; ++k) {
        t.objects.push_back({"A+X^" + std::to_string(k), base_degree + k, false});
        t.susp.push_back(k < n_max ? k + 1 : -1);
    }
    return t;
}

// Two distinct degree-0 objects whose suspensions agree from degree 1 on:
// stably isomorphic but not isomorphic, so local cancellation fails.
inline ObjectTable toy_merge_table(int n_max) {
    ObjectTable t;
    t.name = "toy-merge";
    t.objects.push_back({"A", 0, false});
    t.objects.push_back({"B", 0, false});
    t.susp = {2, 2};
    for (int k = 1; k <= n_max; ++k) {
        t.objects.push_back({"C" + std::to_string(k), k, false});
        t.susp.push_back(k < n_max ? (int)t.objects.size() : -1);
    }
    return t;
}

// Degree table plus a localized component of degree infinity fixed by the
// suspension.
inline ObjectTable toy_localized_table(int n_max) {
    ObjectTable t = degree_table("toy-localized", n_max);
    t.objects.push_back({"L", 0, true});
    t.susp.push_back((int)t.objects.size() - 1);
    return t;
}

struct GenusResult {
    bool infinite = false;
    int value = 0;
    bool saturated = false;  // true means "at least the bound"
};

// Largest k <= bound such that some object B satisfies B + X^k = A.
inline GenusResult genus(const ObjectTable& t, const std::string& label, int bound) {
    int a = t.find(label);
    if (t.objects[a].infinite) return {true, 0, true};
    for (int k = bound; k >= 0; --k) {
        for (size_t b = 0; b < t.objects.size(); ++b)
            if (!t.objects[b].infinite && t.suspend((int)b, k) == a)
                return {false, k, k == bound};
        // k = 0 always matches via B = A
    }
    return {false, 0, false};
}

// sup over k <= bound of genus(A + X^k) - k.
inline GenusResult stable_genus(const ObjectTable& t, const std::string& label, int bound) {
    int a = t.find(label);
    if (t.objects[a].infinite) return {true, 0, true};
    GenusResult best{false, -1, false};
    for (int k = 0; k <= bound; ++k) {
        int ak = t.suspend(a, k);
        if (ak < 0) break;
        GenusResult g = genus(t, t.objects[ak].label, bound + k);
        if (g.value - k > best.value) best = {false, g.value - k, g.saturated};
    }
    return best;
}

struct CheckReport {
    bool passed = true;
    bool exact = true;
    std::vector<std::string> notes;
};

// Injectivity of the stabilization Aut(n) -> Aut(n+1): exact kernel test
// where Aut(n) is enumerable, otherwise sampled.
template <class F>
CheckReport check_injectivity(const F& fam, int n_max, int sample_budget, unsigned seed = 2024) {
    CheckReport rep;
    std::mt19937 rng(seed);
    for (int n = 0; n < n_max; ++n) {
        auto id_up = fam.identity(n + 1);
        auto id_n = fam.identity(n);
        if (fam.enumerable(n)) {
            for (const auto& g : fam.elements(n))
                if (fam.equal(n + 1, fam.stabilize(n, g), id_up) && !fam.equal(n, g, id_n)) {
                    rep.passed = false;
                    rep.notes.push_back("kernel element at degree " + std::to_string(n) + ": " + fam.str(n, g));
                }
        } else {
            rep.exact = false;
            for (int s = 0; s < sample_budget; ++s) {
                auto g = fam.random_element(n, rng);
                if (fam.equal(n, g, id_n)) continue;
                if (fam.equal(n + 1, fam.stabilize(n, g), id_up)) {
                    rep.passed = false;
                    rep.notes.push_back("sampled kernel element at degree " + std::to_string(n));
                }
            }
        }
    }
    rep.notes.push_back(rep.exact ? "exact" : "sampled");
    return rep;
}

// Local cancellation at (A, X): Y + X^m = A + X^n forces Y = A + X^{n-m}
// across the object window.
inline CheckReport check_local_cancellation(const ObjectTable& t, const std::string& label, int n_max) {
    CheckReport rep;
    int a = t.find(label);
    for (size_t y = 0; y < t.objects.size(); ++y)
        for (int m = 0; m <= n_max; ++m) {
            int ym = t.suspend((int)y, m);
            if (ym < 0) continue;
            for (int n = m; n <= n_max; ++n) {
                int an = t.suspend(a, n);
                if (an < 0 || ym != an) continue;
                int want = t.suspend(a, n - m);
                if (want < 0 || want != (int)y) {
                    rep.passed = false;
                    rep.notes.push_back(t.objects[y].label + " + X^" + std::to_string(m) + " = " +
                                        label + " + X^" + std::to_string(n) + " but " +
                                        t.objects[y].label + " != " + label + " + X^" +
                                        std::to_string(n - m));
                }
            }
        }
    return rep;
}

}  // namespace homstab
