#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace homstab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division, rounding toward -infinity (C++ '/' truncates toward zero).
inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

inline std::string to_string(const Rat& x) { return x.str(); }
inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace homstab
