#pragma once

// Twisted H0 and H1 of finitely presented groups through Fox calculus on the
// presentation complex, with presets for braid, symmetric, and pure braid
// groups.  A presentation determines homology exactly through degree one, so
// nothing here pretends to reach higher.

#include <homstab/braid.hpp>
#include <homstab/matrix.hpp>
#include <homstab/rat.hpp>
#include <homstab/word.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homstab {

struct GroupPresentation {
    int gens = 0;
    std::vector<Word> relators;  // freely reduced, letters +-1..+-gens
};

struct Representation {
    int dim = 0;
    std::vector<Mat<Rat>> mats;      // one invertible matrix per generator
    std::vector<Mat<Rat>> inv_mats;  // cached inverses

    Representation(int d, std::vector<Mat<Rat>> ms) : dim(d), mats(std::move(ms)) {
        for (const Mat<Rat>& m : mats) {
            if (m.r != dim || m.c != dim)
                throw std::invalid_argument("representation: matrix dimension mismatch");
            auto inv = inverse(m);
            if (!inv) throw std::invalid_argument("representation: generator matrix not invertible");
            inv_mats.push_back(std::move(*inv));
        }
    }

    static Representation scalars(int gens, const Rat& value) {
        Mat<Rat> m(1, 1);
        m(0, 0) = value;
        return Representation(1, std::vector<Mat<Rat>>(gens, m));
    }

    // product of the letter matrices in word order
    Mat<Rat> eval(const Word& w) const {
        Mat<Rat> m = Mat<Rat>::identity(dim);
        for (int l : w) m = m * (l > 0 ? mats[l - 1] : inv_mats[-l - 1]);
        return m;
    }
};

// Formal integer combination of free-group elements, keyed by reduced words.
struct GroupRingElem {
    std::map<Word, long long> terms;

    void add(const Word& w, long long c) {
        Word r = free_reduce(w);
        auto it = terms.find(r);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(std::move(r), c);
        } else if ((it->second += c) == 0) {
            terms.erase(it);
        }
    }

    friend bool operator==(const GroupRingElem& x, const GroupRingElem& y) {
        return x.terms == y.terms;
    }
};

// d(uv) = du + u dv, d(x_j) = 1, d(x_j^-1) = -x_j^-1
inline GroupRingElem fox_derivative(const Word& w, int j) {
    GroupRingElem out;
    Word prefix;
    for (int l : w) {
        if (l == j) out.add(prefix, 1);
        prefix.push_back(l);
        if (l == -j) out.add(prefix, -1);
    }
    return out;
}

// sum_j (dr/dx_j)(x_j - 1) = r - 1, checked symbolically
inline bool fox_identity_holds(const Word& r, int gens) {
    GroupRingElem lhs;
    for (int j = 1; j <= gens; ++j)
        for (const auto& [w, c] : fox_derivative(r, j).terms) {
            lhs.add(word_concat(w, {j}), c);
            lhs.add(w, -c);
        }
    GroupRingElem rhs;
    rhs.add(r, 1);
    rhs.add({}, -1);
    return lhs == rhs;
}

inline Mat<Rat> eval_ring(const Representation& rho, const GroupRingElem& e) {
    Mat<Rat> out(rho.dim, rho.dim);
    for (const auto& [w, c] : e.terms) {
        Mat<Rat> m = rho.eval(w);
        for (size_t t = 0; t < out.a.size(); ++t) out.a[t] += Rat(c) * m.a[t];
    }
    return out;
}

// H0 is the cokernel of the stacked (rho(x_j) - 1); H1 is ker/im against the
// evaluated Fox Jacobian.  Dimensions over Q.
inline int twisted_homology(const GroupPresentation& P, const Representation& rho, int degree) {
    if (degree != 0 && degree != 1)
        throw std::invalid_argument("twisted homology: degree must be 0 or 1");
    if ((int)rho.mats.size() != P.gens)
        throw std::invalid_argument("twisted homology: generator count mismatch");
    int d = rho.dim, g = P.gens, r = (int)P.relators.size();
    for (const Word& rel : P.relators)
        if (!(rho.eval(rel) == Mat<Rat>::identity(d)))
            throw std::invalid_argument("twisted homology: relator not killed by the representation");

    Mat<Rat> stack(g * d, d);
    for (int j = 0; j < g; ++j)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                stack(j * d + a, b) = rho.mats[j](a, b) - (a == b ? Rat(1) : Rat(0));
    int rank1 = rank_of(stack);
    if (degree == 0) return d - rank1;

    Mat<Rat> jac(r * d, g * d);
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < g; ++j) {
            Mat<Rat> block = eval_ring(rho, fox_derivative(P.relators[k], j + 1));
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) jac(k * d + a, j * d + b) = block(a, b);
        }
    int rank2 = rank_of(jac);
    return (g * d - rank1) - rank2;
}

inline GroupPresentation braid_presentation(int n) {
    if (n < 1) throw std::invalid_argument("braid presentation: need n >= 1");
    GroupPresentation P;
    P.gens = n - 1;
    for (int i = 1; i + 1 <= n - 1; ++i)
        P.relators.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) P.relators.push_back({i, j, -i, -j});
    return P;
}

inline GroupPresentation symmetric_presentation(int n) {
    GroupPresentation P = braid_presentation(n);
    for (int i = 1; i <= n - 1; ++i) P.relators.push_back({i, i});
    return P;
}

// Pure braid generator A_{ik} = (s_{k-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{k-1}^-1):
// strand k loops once around strand i.
inline BraidWord pure_braid_generator_word(int n, int i, int k) {
    if (!(1 <= i && i < k && k <= n))
        throw std::invalid_argument("pure braid generator: need 1 <= i < k <= n");
    Word w;
    for (int t = k - 1; t >= i + 1; --t) w.push_back(t);
    w.push_back(i);
    w.push_back(i);
    for (int t = i + 1; t <= k - 1; ++t) w.push_back(-t);
    return BraidWord(n, w);
}

// Generators A_{ik} for i < k in lexicographic order, 1-based.
inline int pure_braid_gen_index(int n, int i, int k) {
    if (!(1 <= i && i < k && k <= n))
        throw std::invalid_argument("pure braid generator: need 1 <= i < k <= n");
    return (i - 1) * n - (i * (i - 1)) / 2 + (k - i);
}

// Conjugation presentation: one relator per generator pair with s < k, saying
// how A_rs conjugates A_ik.  Pairs sharing the right endpoint get none (they
// generate a free subgroup).  The conjugating words below were verified to
// hold in the ambient braid group; see the test suite.
inline GroupPresentation pure_braid_presentation(int n) {
    if (n < 1) throw std::invalid_argument("pure braid presentation: need n >= 1");
    GroupPresentation P;
    P.gens = n * (n - 1) / 2;
    auto a = [&](int i, int k) { return pure_braid_gen_index(n, i, k); };
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            for (int i = 1; i <= n; ++i)
                for (int k = i + 1; k <= n; ++k) {
                    if (s >= k) continue;
                    Word conj_by;  // W with A_rs^-1 A_ik A_rs = W A_ik W^-1
                    if (s == i)
                        conj_by = {a(r, k)};
                    else if (r == i)
                        conj_by = {a(i, k), a(s, k)};
                    else if (r < i && i < s)
                        conj_by = {a(r, k), a(s, k), -a(r, k), -a(s, k)};
                    // s < i and i < r both commute: empty word
                    Word rel = {-a(r, s), a(i, k), a(r, s)};
                    rel = word_concat(rel, conj_by);
                    rel.push_back(-a(i, k));
                    rel = word_concat(rel, word_inverse(conj_by));
                    P.relators.push_back(free_reduce(rel));
                }
    return P;
}

// The two summand dimensions of H1(B_n; Q[Z/2]) for the system where a braid
// acts through the sign of its underlying permutation: (trivial, sign).
inline std::pair<int, int> oriented_h1(int n) {
    if (n < 2) throw std::invalid_argument("oriented h1: need n >= 2");
    GroupPresentation P = braid_presentation(n);
    return {twisted_homology(P, Representation::scalars(P.gens, Rat(1)), 1),
            twisted_homology(P, Representation::scalars(P.gens, Rat(-1)), 1)};
}

// Text format: "gens: 2; rel: s1 s2 s1 S2 S1 S2" with capitals for inverses.
inline GroupPresentation parse_presentation(const std::string& text) {
    GroupPresentation P;
    bool have_gens = false;
    std::istringstream in(text);
    std::string seg;
    while (std::getline(in, seg, ';')) {
        std::istringstream ss(seg);
        std::string head;
        if (!(ss >> head)) continue;
        if (head == "gens:") {
            if (!(ss >> P.gens) || P.gens < 0)
                throw std::invalid_argument("presentation: bad generator count");
            have_gens = true;
        } else if (head == "rel:") {
            if (!have_gens) throw std::invalid_argument("presentation: gens before rel");
            Word w;
            std::string tok;
            while (ss >> tok) {
                if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
                    throw std::invalid_argument("presentation: bad letter: " + tok);
                int j = 0;
                try {
                    j = std::stoi(tok.substr(1));
                } catch (...) {
                    throw std::invalid_argument("presentation: bad letter: " + tok);
                }
                if (j < 1 || j > P.gens)
                    throw std::invalid_argument("presentation: letter out of range: " + tok);
                w.push_back(tok[0] == 's' ? j : -j);
            }
            w = free_reduce(w);
            if (w.empty()) throw std::invalid_argument("presentation: relator reduces to nothing");
            P.relators.push_back(w);
        } else {
            throw std::invalid_argument("presentation: unknown section: " + head);
        }
    }
    if (!have_gens) throw std::invalid_argument("presentation: missing gens");
    return P;
}

}  // namespace homstab
