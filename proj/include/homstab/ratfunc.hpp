#pragma once

// Exact rational functions in one variable t over Q, used as the scalar
// field for coefficient systems that need a formal parameter.

#include <homstab/rat.hpp>

#include <cassert>
#include <string>
#include <vector>

namespace homstab {

struct Poly {
    std::vector<Rat> c;  // c[i] = coefficient of t^i, no trailing zeros

    Poly() = default;
    explicit Poly(const Rat& x) {
        if (x != 0) c.push_back(x);
    }
    static Poly var() {
        Poly p;
        p.c = {Rat(0), Rat(1)};
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }  // -1 for zero
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
};

// Quotient and remainder with deg(rem) < deg(b); b nonzero.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    assert(!b.is_zero());
    Poly q;
    if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Rat(0));
    while (!a.is_zero() && a.deg() >= b.deg()) {
        int d = a.deg() - b.deg();
        Rat f = a.lead() / b.lead();
        q.c[d] = f;
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i + d] -= f * b.c[i];
        a.trim();
    }
    q.trim();
    return {q, a};
}

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero() && a.lead() != 1) {  // monic normalization
        Rat inv = Rat(1) / a.lead();
        for (auto& x : a.c) x *= inv;
    }
    return a;
}

// Reduced fraction num/den, den monic and coprime to num.
struct RatFunc {
    Poly num, den;

    RatFunc() : den(Rat(1)) {}
    RatFunc(int v) : num(Rat(v)), den(Rat(1)) {}
    RatFunc(const Rat& v) : num(v), den(Rat(1)) {}
    RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    static RatFunc t() { return RatFunc(Poly::var(), Poly(Rat(1))); }

    void normalize() {
        assert(!den.is_zero());
        if (num.is_zero()) {
            den = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        if (g.deg() > 0) {
            num = poly_divmod(num, g).first;
            den = poly_divmod(den, g).first;
        }
        Rat l = den.lead();
        if (l != 1) {
            Rat inv = Rat(1) / l;
            for (auto& x : num.c) x *= inv;
            for (auto& x : den.c) x *= inv;
        }
    }

    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(Poly() - a.num, a.den); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        assert(!b.is_zero());
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
};

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= p.deg(); ++i) {
        if (p.c[i] == 0) continue;
        Rat a = p.c[i];
        bool neg = a < 0;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        Rat mag = neg ? Rat(-a) : a;
        std::string coeff = mag.str();
        if (i == 0) s += coeff;
        else {
            if (mag != 1) s += coeff + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s;
}

inline std::string to_string(const RatFunc& f) {
    if (f.den == Poly(Rat(1))) return to_string(f.num);
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

}  // namespace homstab
