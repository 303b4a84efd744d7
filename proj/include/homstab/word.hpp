#pragma once

// Words in generators and inverses: nonzero ints, +i for generator i
// (1-based), -i for its inverse.

#include <cstdlib>
#include <vector>

namespace homstab {

using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace homstab
