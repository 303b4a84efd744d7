#include <catch2/catch_amalgamated.hpp>

#include <homstab/intmat.hpp>
#include <homstab/matrix.hpp>
#include <homstab/rat.hpp>
#include <homstab/ratfunc.hpp>

#include <random>

using namespace homstab;

TEST_CASE("floor division rounds toward minus infinity") {
    CHECK(floor_div(7LL, 2LL) == 3);
    CHECK(floor_div(-1LL, 2LL) == -1);
    CHECK(floor_div(-3LL, 2LL) == -2);
    CHECK(floor_div(-4LL, 2LL) == -2);
    CHECK(floor_div(Int(-10), Int(3)) == Int(-4));
    CHECK(rat_floor(Rat(-7, 2)) == Int(-4));
    CHECK(rat_floor(Rat(7, 2)) == Int(3));
}

TEST_CASE("polynomial arithmetic") {
    Poly one(Rat(1)), t = Poly::var();
    Poly p = (one - t) * (one + t);
    Poly q = one - t * t;
    CHECK(p == q);
    auto [quot, rem] = poly_divmod(t * t - one, t - one);
    CHECK(quot == t + one);
    CHECK(rem.is_zero());
    CHECK(poly_gcd(t * t - one, t - one) == t - one);
}

TEST_CASE("rational function field") {
    RatFunc t = RatFunc::t(), one(1);
    RatFunc f = (t * t - one) / (t - one);
    CHECK(f == t + one);
    CHECK((f - t - one).is_zero());
    CHECK(t / t == one);
    CHECK(to_string(one - t) == "1 - t");
    RatFunc g = one / (one + t);
    CHECK(g * (one + t) == one);
}

TEST_CASE("field linear algebra over Q") {
    Mat<Rat> A(2, 3);
    A(0, 0) = 1; A(0, 1) = 2; A(0, 2) = 3;
    A(1, 0) = 2; A(1, 1) = 4; A(1, 2) = 6;
    CHECK(rank_of(A) == 1);
    Mat<Rat> K = kernel_basis(A);
    CHECK(K.c == 2);
    CHECK((A * K).is_zero());
    Mat<Rat> I = image_basis(A);
    CHECK(I.c == 1);

    Mat<Rat> B(2, 2);
    B(0, 0) = 1; B(0, 1) = 1; B(1, 0) = 0; B(1, 1) = 1;
    auto Binv = inverse(B);
    REQUIRE(Binv.has_value());
    CHECK(*Binv * B == Mat<Rat>::identity(2));

    auto X = solve(B, Mat<Rat>::identity(2));
    REQUIRE(X.has_value());
    CHECK(B * *X == Mat<Rat>::identity(2));

    Mat<Rat> C = complement_basis(I, 2);
    CHECK(I.c + C.c == 2);
    CHECK(rank_of(hcat(I, C)) == 2);
}

TEST_CASE("field linear algebra over Q(t)") {
    RatFunc t = RatFunc::t();
    Mat<RatFunc> M(2, 2);
    M(0, 0) = RatFunc(1) - t; M(0, 1) = t;
    M(1, 0) = RatFunc(1);     M(1, 1) = RatFunc(0);
    auto Minv = inverse(M);
    REQUIRE(Minv.has_value());
    CHECK(M * *Minv == Mat<RatFunc>::identity(2));
    CHECK(rank_of(M) == 2);
}

TEST_CASE("smith normal form pinned examples") {
    Mat<Int> d23(2, 2);
    d23(0, 0) = 2; d23(1, 1) = 3;
    auto s = smith_normal_form(d23);
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 6);

    Mat<Int> z(3, 4);
    auto sz = smith_normal_form(z);
    for (const Int& d : sz.diag) CHECK(d == 0);

    auto si = smith_normal_form(Mat<Int>::identity(5));
    for (const Int& d : si.diag) CHECK(d == 1);
}

namespace {

// Determinant mod a prime, insensitive to entry size.
long long det_mod_p(const Mat<Int>& m, long long p) {
    int n = m.r;
    std::vector<long long> a((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int e = m(i, j) % p;
            if (e < 0) e += p;
            a[(size_t)i * n + j] = (long long)e;
        }
    auto powmod = [&](long long b, long long e) {
        long long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = (__int128)r * b % p;
            b = (__int128)b * b % p;
            e >>= 1;
        }
        return r;
    };
    long long det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[(size_t)i * n + k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a[(size_t)k * n + j], a[(size_t)piv * n + j]);
            det = p - det;
        }
        long long pk = a[(size_t)k * n + k];
        det = (__int128)det * pk % p;
        long long inv = powmod(pk, p - 2);
        for (int i = k + 1; i < n; ++i) {
            long long f = (__int128)a[(size_t)i * n + k] * inv % p;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) {
                long long v = a[(size_t)i * n + j] - (__int128)f * a[(size_t)k * n + j] % p;
                a[(size_t)i * n + j] = v < 0 ? v + p : v;
            }
        }
    }
    return det % p;
}

void check_snf(const Mat<Int>& M, std::mt19937& rng) {
    auto s = smith_normal_form(M, true);
    REQUIRE(s.U.has_value());
    REQUIRE(s.V.has_value());
    Mat<Int> D = *s.U * M * *s.V;
    for (int i = 0; i < M.r; ++i)
        for (int j = 0; j < M.c; ++j) {
            Int want = (i == j && i < (int)s.diag.size()) ? s.diag[i] : Int(0);
            REQUIRE(D(i, j) == want);
        }
    for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
        if (s.diag[i + 1] == 0) continue;
        REQUIRE(s.diag[i] != 0);
        REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
    }
    // unimodularity: exact determinant when small, else mod two random primes
    // (transform entries can be wide, so exact determinants are kept short)
    if (std::max(M.r, M.c) <= 8) {
        Int du = bareiss_det(*s.U), dv = bareiss_det(*s.V);
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
    }
    for (long long p : {999999937LL, 1000000007LL}) {
        long long du = det_mod_p(*s.U, p), dv = det_mod_p(*s.V, p);
        REQUIRE((du == 1 || du == p - 1));
        REQUIRE((dv == 1 || dv == p - 1));
    }
    // diagonal-only path (possibly int64) agrees with the exact path
    auto fast = smith_normal_form(M, false);
    REQUIRE(fast.diag == s.diag);
    // nonzero diagonal count agrees with the rank over the rationals
    Mat<Rat> Q(M.r, M.c);
    for (int i = 0; i < M.r; ++i)
        for (int j = 0; j < M.c; ++j) Q(i, j) = Rat(M(i, j));
    REQUIRE(s.rank() == rank_of(Q));
    (void)rng;
}

}  // namespace

TEST_CASE("smith normal form round trip on random dense matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 14), entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int r = dim(rng), c = dim(rng);
        Mat<Int> M(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) M(i, j) = entry(rng);
        check_snf(M, rng);
    }
}

TEST_CASE("smith normal form round trip on random sparse sign matrices") {
    // shaped like the incidence matrices the homology pipeline produces
    std::mt19937 rng(771177);
    std::uniform_int_distribution<int> dim(5, 40), sign(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        Mat<Int> M(r, c);
        std::uniform_int_distribution<int> colpick(0, c - 1);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < 3; ++k) M(i, colpick(rng)) = sign(rng) ? 1 : -1;
        check_snf(M, rng);
    }
}
