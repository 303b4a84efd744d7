#pragma once

// Braid words and the exact word/coset problems via the Artin action on the
// free group.  Conventions (fixed once, used by every downstream module):
//   - juxtaposition of group elements means "left factor first";
//   - a word acts on the free group letter by letter, first letter first;
//   - sigma_i sends x_i to x_i x_{i+1} x_i^{-1} and x_{i+1} to x_i;
//   - permutation_of composes the transpositions left first as well.

#include <homstab/perm.hpp>
#include <homstab/word.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace homstab {

struct BraidWord {
    int strands = 1;
    Word letters;  // +i / -i for sigma_i^{+-1}, 1 <= i <= strands-1

    BraidWord() = default;
    BraidWord(int n, Word w) : strands(n), letters(std::move(w)) {
        for (int l : letters)
            if (l == 0 || std::abs(l) >= strands)
                throw std::invalid_argument("braid letter out of range");
    }

    static BraidWord id(int n) { return BraidWord(n, {}); }
    static BraidWord gen(int n, int i, int sign = 1) { return BraidWord(n, {sign * i}); }

    bool trivial_letters() const { return letters.empty(); }
};

inline BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    return BraidWord(a.strands, word_concat(a.letters, b.letters));
}

inline BraidWord braid_inverse(const BraidWord& a) {
    return BraidWord(a.strands, word_inverse(a.letters));
}

// Same letters on more strands (trailing strands trivial).
inline BraidWord braid_pad(const BraidWord& a, int extra) {
    return BraidWord(a.strands + extra, a.letters);
}

// Letters moved up by `offset` strands (leading strands trivial).
inline BraidWord braid_shift(const BraidWord& a, int offset) {
    Word w;
    w.reserve(a.letters.size());
    for (int l : a.letters) w.push_back(l > 0 ? l + offset : l - offset);
    return BraidWord(a.strands + offset, w);
}

struct FreeWord {
    int rank = 0;
    Word letters;  // freely reduced
};

// Image of x_j under the substitution action of b, freely reduced.
inline FreeWord artin_image(const BraidWord& b, int j) {
    if (j < 1 || j > b.strands) throw std::invalid_argument("generator index out of range");
    Word cur = {j};
    for (int l : b.letters) {
        int i = std::abs(l);
        Word next;
        next.reserve(cur.size() * 3);
        auto emit = [&next](std::initializer_list<int> xs) {
            for (int x : xs) {
                if (!next.empty() && next.back() == -x)
                    next.pop_back();
                else
                    next.push_back(x);
            }
        };
        for (int x : cur) {
            int g = std::abs(x);
            bool inv = x < 0;
            if (l > 0) {
                if (g == i)
                    emit(inv ? std::initializer_list<int>{i, -(i + 1), -i}
                             : std::initializer_list<int>{i, i + 1, -i});
                else if (g == i + 1)
                    emit({inv ? -i : i});
                else
                    emit({x});
            } else {
                if (g == i)
                    emit({inv ? -(i + 1) : i + 1});
                else if (g == i + 1)
                    emit(inv ? std::initializer_list<int>{-(i + 1), -i, i + 1}
                             : std::initializer_list<int>{-(i + 1), i, i + 1});
                else
                    emit({x});
            }
        }
        cur = std::move(next);
    }
    return FreeWord{b.strands, cur};
}

// b1 B_k = b2 B_k for the standard parabolic on the first k strands.
// Decided on the relative word d = b1^{-1} b2: right multiplication by the
// parabolic fixes x_{k+1..n} letterwise, and the pointwise stabilizer of the
// last n-k generators is exactly B_k (strand combing), so d lies in B_k iff
// it fixes each of x_{k+1},...,x_n.
inline bool parabolic_coset_equal(const BraidWord& b1, const BraidWord& b2, int n, int k) {
    if (b1.strands != n || b2.strands != n) throw std::invalid_argument("strand count mismatch");
    if (k < 0 || k > n) throw std::invalid_argument("parabolic size out of range");
    BraidWord d = braid_concat(braid_inverse(b1), b2);
    for (int j = k + 1; j <= n; ++j) {
        FreeWord im = artin_image(d, j);
        if (!(im.letters.size() == 1 && im.letters[0] == j)) return false;
    }
    return true;
}

// Exact word problem (Artin's faithfulness).
inline bool braid_equal(const BraidWord& b1, const BraidWord& b2) {
    if (b1.strands != b2.strands) throw std::invalid_argument("strand count mismatch");
    return parabolic_coset_equal(b1, b2, b1.strands, 0);
}

inline Perm permutation_of(const BraidWord& b) {
    Perm p = Perm::identity(b.strands);
    for (int l : b.letters) p = p.then(Perm::transposition(b.strands, std::abs(l) - 1));
    return p;
}

// Block braiding beta_{i,j} in B_{i+j}: the positive crossing of the first
// i strands past the last j, so its permutation sends x to x+j for x < i
// and to x-i otherwise.  Base case beta_{i,1} = sigma_i...sigma_1 (first
// letter acts first); larger j via beta_{i,j} = (beta_{i,j-1} padded by one
// trailing strand) then (beta_{i,1} shifted by j-1), which is one hexagon.
inline BraidWord block_braiding(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("block sizes must be positive");
    Word base;
    for (int k = i; k >= 1; --k) base.push_back(k);
    BraidWord bi1(i + 1, base);
    BraidWord cur = bi1;
    for (int jj = 2; jj <= j; ++jj)
        cur = braid_concat(braid_pad(cur, 1), braid_shift(bi1, jj - 1));
    return cur;
}

inline std::string braid_str(const BraidWord& b) {
    std::string s = "B" + std::to_string(b.strands) + ":";
    for (int l : b.letters) {
        s += " s" + std::to_string(std::abs(l));
        if (l < 0) s += "^-1";
    }
    return s;
}

// Grammar: "B<n>: s<i> s<j>^-1 ...", whitespace separated.
inline BraidWord braid_parse(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    if (!(in >> head) || head.size() < 3 || head[0] != 'B' || head.back() != ':')
        throw std::invalid_argument("expected strand prefix like \"B3:\"");
    int n = 0;
    try {
        n = std::stoi(head.substr(1, head.size() - 2));
    } catch (...) {
        throw std::invalid_argument("bad strand count in braid prefix");
    }
    if (n < 1) throw std::invalid_argument("strand count must be positive");
    Word letters;
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 's')
            throw std::invalid_argument("bad braid letter: " + tok);
        int i = 0;
        try {
            i = std::stoi(tok.substr(1));
        } catch (...) {
            throw std::invalid_argument("bad braid letter: " + tok);
        }
        if (i < 1 || i >= n) throw std::invalid_argument("braid letter out of range: " + tok);
        letters.push_back(inv ? -i : i);
    }
    return BraidWord(n, letters);
}

}  // namespace homstab
