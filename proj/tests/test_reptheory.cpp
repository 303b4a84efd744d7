#include <homstab/reptheory.hpp>

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace homstab;

namespace {

// a permutation of cycle type mu as a word in adjacent transpositions
Word class_word(const Partition& mu) {
    Word w;
    int start = 1;
    for (int p : mu.parts) {
        for (int t = start; t < start + p - 1; ++t) w.push_back(t);
        start += p;
    }
    return w;
}

Rat trace_on_class(const std::vector<Mat<Rat>>& gens, int f, const Partition& mu) {
    Mat<Rat> m = Mat<Rat>::identity(f);
    for (int l : class_word(mu)) m = m * gens[l - 1];
    Rat tr = 0;
    for (int i = 0; i < f; ++i) tr += m(i, i);
    return tr;
}

int ones(const Partition& mu) {
    int c = 0;
    for (int p : mu.parts) c += (p == 1);
    return c;
}

Int sign_of(const Partition& mu) {
    return (mu.weight() - mu.rows()) % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("partitions and padded partitions") {
    Partition lam({3, 1});
    CHECK(lam.weight() == 4);
    CHECK(lam.first() == 3);
    CHECK(lam.str() == "(3,1)");
    CHECK(Partition{}.first() == 0);
    CHECK(Partition{}.str() == "()");
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);

    CHECK(pad(Partition({1, 1}), 5) == Partition({3, 1, 1}));
    CHECK(pad(Partition{}, 4) == Partition({4}));
    CHECK(pad(Partition{}, 0) == Partition{});
    CHECK(pad(Partition({2}), 4) == Partition({2, 2}));
    CHECK_THROWS_AS(pad(Partition({2}), 3), std::invalid_argument);

    std::vector<int> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK((int)partitions_of(n).size() == counts[n]);

    for (int n = 1; n <= 8; ++n) {
        Int total = 0;
        for (const Partition& mu : partitions_of(n)) {
            CHECK(mu.weight() == n);
            total += detail::factorial(n) / centralizer_order(mu);
        }
        CHECK(total == detail::factorial(n));  // class sizes fill the group
    }
    CHECK(centralizer_order(Partition({1, 1, 1, 1})) == 24);
    CHECK(centralizer_order(Partition({4})) == 4);
    CHECK(centralizer_order(Partition({2, 2, 1})) == 8);
}

TEST_CASE("hook length dimensions") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(hook_dim(Partition({n})) == 1);
        CHECK(hook_dim(Partition(std::vector<int>(n, 1))) == 1);
    }
    CHECK(hook_dim(Partition({2, 1})) == 2);
    CHECK(hook_dim(Partition({3, 1, 1})) == 6);

    for (int n = 1; n <= 8; ++n) {
        long long sumsq = 0;
        for (const Partition& lam : partitions_of(n)) {
            long long f = hook_dim(lam);
            sumsq += f * f;
            if (n <= 6) CHECK((long long)standard_tableaux(lam).size() == f);
        }
        CHECK(Int(sumsq) == detail::factorial(n));
    }
}

TEST_CASE("seminormal matrices satisfy the symmetric group relations") {
    for (int n = 2; n <= 5; ++n) {
        auto gens = seminormal_matrices(Partition({n}));
        for (const auto& M : gens) {
            REQUIRE(M.r == 1);
            CHECK(M(0, 0) == Rat(1));
        }
    }
    auto sign_gen = seminormal_matrices(Partition({1, 1}));
    REQUIRE(sign_gen.size() == 1);
    CHECK(sign_gen[0](0, 0) == Rat(-1));
    CHECK(seminormal_matrices(Partition({2, 1}))[0].r == 2);

    for (int n = 2; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            auto gens = seminormal_matrices(lam);
            int f = gens[0].r;
            Mat<Rat> id = Mat<Rat>::identity(f);
            for (const auto& M : gens) REQUIRE(M * M == id);
            for (size_t i = 0; i + 1 < gens.size(); ++i)
                REQUIRE(gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1]);
            for (size_t i = 0; i < gens.size(); ++i)
                for (size_t j = i + 2; j < gens.size(); ++j)
                    REQUIRE(gens[i] * gens[j] == gens[j] * gens[i]);
        }
}

TEST_CASE("characters match seminormal traces") {
    for (const Partition& mu : partitions_of(5)) {
        CHECK(mn_character(Partition({5}), mu) == 1);
        CHECK(mn_character(Partition({1, 1, 1, 1, 1}), mu) == sign_of(mu));
        CHECK(mn_character(Partition({4, 1}), mu) == ones(mu) - 1);
    }

    // first orthogonality at n = 5
    auto p5 = partitions_of(5);
    for (const Partition& a : p5)
        for (const Partition& b : p5) {
            Int dot = 0;
            for (const Partition& mu : p5)
                dot += (detail::factorial(5) / centralizer_order(mu)) * mn_character(a, mu) *
                       mn_character(b, mu);
            CHECK(dot == (a == b ? detail::factorial(5) : Int(0)));
        }

    std::mt19937 rng(321321);
    for (int n = 2; n <= 8; ++n) {
        auto classes = partitions_of(n);
        std::uniform_int_distribution<int> cd(0, (int)classes.size() - 1);
        for (const Partition& lam : partitions_of(n)) {
            auto gens = seminormal_matrices(lam);
            int f = gens[0].r;
            for (int trial = 0; trial < 3; ++trial) {
                const Partition& mu = classes[cd(rng)];
                CHECK(trace_on_class(gens, f, mu) == Rat(mn_character(lam, mu)));
            }
        }
    }
}

TEST_CASE("multiplicities in the two-subsets module") {
    for (int n = 2; n <= 8; ++n) CHECK(multiplicity_oracle(Partition{}, n) == 1);
    for (int n = 3; n <= 8; ++n) CHECK(multiplicity_oracle(Partition({1}), n) == 1);
    for (int n = 4; n <= 8; ++n) {
        CHECK(multiplicity_oracle(Partition({2}), n) == 1);
        CHECK(multiplicity_oracle(Partition({1, 1}), n) == 0);
    }

    // at n = 6 the multiplicities and dimensions fill all 15 two-subsets
    std::vector<Partition> small = {Partition{},        Partition({1}),    Partition({2}),
                                    Partition({1, 1}),  Partition({3}),    Partition({2, 1}),
                                    Partition({1, 1, 1})};
    long long total = 0;
    for (const Partition& lam : small) {
        if (lam.weight() + lam.first() > 6) continue;
        total += multiplicity_oracle(lam, 6) * hook_dim(pad(lam, 6));
    }
    CHECK(total == 15);
}

TEST_CASE("twisted homology agrees with the character oracle") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(multiplicity_h(Partition{}, n, 0) == 1);
        CHECK(multiplicity_h(Partition({1}), n, 0) == 0);
    }
    CHECK(multiplicity_h(Partition({2}), 5, 1) == 1);
    CHECK(multiplicity_h(Partition({2}), 5, 1) == multiplicity_oracle(Partition({2}), 5));

    std::vector<Partition> lams = {Partition({1}), Partition({2}), Partition({1, 1})};
    for (const Partition& lam : lams)
        for (int n = std::max(2, lam.weight() + lam.first()); n <= 8; ++n)
            CHECK(multiplicity_h(lam, n, 1) == multiplicity_oracle(lam, n));

    // frozen values: (1) reaches its limit at n = 3, (2) is 1, (1,1) is 0
    CHECK(multiplicity_h(Partition({1}), 2, 1) == 0);
    for (int n = 3; n <= 8; ++n) CHECK(multiplicity_h(Partition({1}), n, 1) == 1);
    for (int n = 4; n <= 8; ++n) CHECK(multiplicity_h(Partition({2}), n, 1) == 1);
    for (int n = 3; n <= 8; ++n) CHECK(multiplicity_h(Partition({1, 1}), n, 1) == 0);

    // constancy from the promised onset inside the window
    for (int n = stabilization_onset(Partition{}, 1); n <= 8; ++n)
        CHECK(multiplicity_h(Partition{}, n, 1) == 1);
}

TEST_CASE("stabilization onset formula") {
    CHECK(stabilization_onset(Partition({1}), 1) == 8);
    CHECK(stabilization_onset(Partition{}, 0) == 2);
    CHECK(stabilization_onset(Partition({1, 1}), 1) == 10);
}
