#include <homstab/ranges.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace homstab;

namespace {

RangeQuery query(RangeFamily f, int n) {
    RangeQuery q;
    q.family = f;
    q.n = n;
    return q;
}

}  // namespace

TEST_CASE("pinned range values") {
    RangeQuery q = query(RangeFamily::general_constant, 10);
    q.k = 2;
    RangeAnswer a = evaluate_range(q);
    CHECK(a.iso_max_i == 4);
    CHECK(a.epi_max_i == 5);

    q = query(RangeFamily::general_abelian, 10);
    q.k = 3;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == 2);
    CHECK(a.epi_max_i == 3);

    q = query(RangeFamily::general_twisted, 10);
    q.k = 2;
    q.r = 1;
    q.N = 0;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == 3);
    CHECK(a.epi_max_i == 4);

    q = query(RangeFamily::configurations, 7);
    q.coeffs = CoeffKind::constant;
    q.improved_iso = true;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == 3);
    CHECK(a.epi_max_i == 3);

    a = evaluate_range(query(RangeFamily::oriented, 8));
    CHECK(a.iso_max_i == 2);
    CHECK(a.epi_max_i == 2);

    q = query(RangeFamily::manifolds, 20);
    q.gcase = GenusCase::equal_factors;
    q.r = 0;
    q.u = 1;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == 8);
    CHECK(a.epi_max_i == 9);

    // twisted stability needs n strictly past the onset
    q = query(RangeFamily::general_twisted, 0);
    q.N = 3;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == -1);
    CHECK(a.epi_max_i == -1);
    CHECK(a.note.find("empty") != std::string::npos);
    q.n = 3;
    CHECK(evaluate_range(q).epi_max_i == -1);
    q.n = 4;
    CHECK(evaluate_range(q).epi_max_i >= 0);
}

TEST_CASE("floors are taken toward minus infinity") {
    RangeQuery q = query(RangeFamily::general_constant, 0);
    q.k = 2;
    CHECK(evaluate_range(q).iso_max_i == -1);  // not truncation toward zero
    CHECK(evaluate_range(q).epi_max_i == 0);
    for (int n = 0; n <= 10; ++n)
        for (int k = 2; k <= 4; ++k) {
            q = query(RangeFamily::general_constant, n);
            q.k = k;
            CHECK(evaluate_range(q).iso_max_i == std::max((int)floor_div(n - 1, k), -1));
            CHECK(evaluate_range(q).epi_max_i == std::max((int)floor_div(n - 2 + k, k), -1));
        }

    // bounds far below zero collapse to the empty marker
    q = query(RangeFamily::general_twisted, 1);
    q.k = 2;
    q.r = 3;
    q.N = 0;
    RangeAnswer a = evaluate_range(q);
    CHECK(a.iso_max_i == -1);
    CHECK(a.epi_max_i == -1);
}

TEST_CASE("range sweeps") {
    RangeQuery base = query(RangeFamily::general_constant, 0);
    base.k = 2;
    std::vector<RangeRow> rows = range_sweep(grid_over_n(base, 0, 12));
    REQUIRE(rows.size() == 13);
    for (int n = 0; n <= 12; ++n) {
        REQUIRE(rows[n].ok);
        CHECK(rows[n].query.n == n);
        CHECK(rows[n].answer.iso_max_i == std::max((int)floor_div(n - 1, 2), -1));
        CHECK_FALSE(rows[n].answer.note.empty());
    }

    CHECK(range_sweep({}).empty());
    CHECK(grid_over_n(base, 3, 2).empty());

    // invalid rows report their error without aborting the sweep
    std::vector<RangeQuery> grid = grid_over_n(base, 4, 6);
    grid[1].k = 1;
    rows = range_sweep(grid);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].ok);
    CHECK_FALSE(rows[1].ok);
    CHECK(rows[1].error.find("k must be at least 2") != std::string::npos);
    CHECK(rows[2].ok);

    // deterministic: same grid, same table
    std::vector<RangeRow> again = range_sweep(grid);
    REQUIRE(again.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(again[i].ok == rows[i].ok);
        CHECK(again[i].answer.iso_max_i == rows[i].answer.iso_max_i);
        CHECK(again[i].answer.epi_max_i == rows[i].answer.epi_max_i);
        CHECK(again[i].answer.note == rows[i].answer.note);
        CHECK(again[i].error == rows[i].error);
    }
}

TEST_CASE("ranges are monotone in their parameters") {
    auto nondecreasing_in_n = [](RangeQuery base) {
        int prev_iso = -2, prev_epi = -2;
        for (const RangeRow& row : range_sweep(grid_over_n(base, 0, 15))) {
            REQUIRE(row.ok);
            CHECK(row.answer.iso_max_i >= prev_iso);
            CHECK(row.answer.epi_max_i >= prev_epi);
            CHECK(row.answer.iso_max_i <= row.answer.epi_max_i);
            prev_iso = row.answer.iso_max_i;
            prev_epi = row.answer.epi_max_i;
        }
    };
    for (int k = 2; k <= 4; ++k) {
        RangeQuery q = query(RangeFamily::general_constant, 0);
        q.k = k;
        nondecreasing_in_n(q);
        if (k >= 3) {
            q.family = RangeFamily::general_abelian;
            nondecreasing_in_n(q);
        }
        q.family = RangeFamily::general_twisted;
        q.r = 1;
        nondecreasing_in_n(q);
        q.family = RangeFamily::general_split;
        nondecreasing_in_n(q);
    }
    for (CoeffKind c :
         {CoeffKind::constant, CoeffKind::abelian, CoeffKind::twisted, CoeffKind::split}) {
        RangeQuery q = query(RangeFamily::configurations, 0);
        q.coeffs = c;
        q.r = 1;
        nondecreasing_in_n(q);
    }
    nondecreasing_in_n(query(RangeFamily::oriented, 0));
    for (GenusCase g : {GenusCase::equal_factors, GenusCase::unequal_factors}) {
        RangeQuery q = query(RangeFamily::manifolds, 0);
        q.gcase = g;
        q.m = 2;
        nondecreasing_in_n(q);
    }

    // bounds only get worse as the degree, the stable rank or the generator
    // count grow
    auto nonincreasing = [](std::vector<RangeQuery> grid) {
        int prev_iso = 1 << 20, prev_epi = 1 << 20;
        for (const RangeRow& row : range_sweep(grid)) {
            REQUIRE(row.ok);
            CHECK(row.answer.iso_max_i <= prev_iso);
            CHECK(row.answer.epi_max_i <= prev_epi);
            prev_iso = row.answer.iso_max_i;
            prev_epi = row.answer.epi_max_i;
        }
    };
    std::vector<RangeQuery> grid;
    for (int r = 0; r <= 5; ++r) {
        RangeQuery q = query(RangeFamily::general_twisted, 12);
        q.r = r;
        grid.push_back(q);
    }
    nonincreasing(grid);
    grid.clear();
    for (int u = 1; u <= 6; ++u) {
        RangeQuery q = query(RangeFamily::manifolds, 20);
        q.u = u;
        grid.push_back(q);
    }
    nonincreasing(grid);
    grid.clear();
    for (int m = 0; m <= 6; ++m) {
        RangeQuery q = query(RangeFamily::manifolds, 20);
        q.gcase = GenusCase::unequal_factors;
        q.m = m;
        grid.push_back(q);
    }
    nonincreasing(grid);
}

TEST_CASE("split bounds dominate twisted bounds") {
    for (int k = 2; k <= 4; ++k)
        for (int r = 1; r <= 3; ++r)
            for (int n = 0; n <= 15; ++n) {
                RangeQuery q = query(RangeFamily::general_twisted, n);
                q.k = k;
                q.r = r;
                q.N = 0;
                RangeAnswer tw = evaluate_range(q);
                q.family = RangeFamily::general_split;
                RangeAnswer sp = evaluate_range(q);
                CHECK(sp.iso_max_i >= tw.iso_max_i);
                CHECK(sp.epi_max_i >= tw.epi_max_i);
            }
}

TEST_CASE("configuration space bounds specialize the general ones") {
    for (int n = 0; n <= 12; ++n) {
        for (int r = 0; r <= 3; ++r)
            for (int N = 0; N <= 2; ++N) {
                RangeQuery gq = query(RangeFamily::general_twisted, n);
                gq.k = 2;
                gq.r = r;
                gq.N = N;
                RangeQuery cq = query(RangeFamily::configurations, n);
                cq.coeffs = CoeffKind::twisted;
                cq.r = r;
                cq.N = N;
                CHECK(evaluate_range(gq).iso_max_i == evaluate_range(cq).iso_max_i);
                CHECK(evaluate_range(gq).epi_max_i == evaluate_range(cq).epi_max_i);
                gq.family = RangeFamily::general_split;
                cq.coeffs = CoeffKind::split;
                CHECK(evaluate_range(gq).iso_max_i == evaluate_range(cq).iso_max_i);
                CHECK(evaluate_range(gq).epi_max_i == evaluate_range(cq).epi_max_i);
            }
        RangeQuery oq = query(RangeFamily::oriented, n);
        RangeQuery aq = query(RangeFamily::configurations, n);
        aq.coeffs = CoeffKind::abelian;
        CHECK(evaluate_range(oq).iso_max_i == evaluate_range(aq).iso_max_i);
        CHECK(evaluate_range(oq).epi_max_i == evaluate_range(aq).epi_max_i);
    }
}

TEST_CASE("improved bounds") {
    RangeQuery q = query(RangeFamily::general_constant, 10);
    q.k = 2;
    q.improved_iso = true;
    RangeAnswer a = evaluate_range(q);
    CHECK(a.iso_max_i == 5);
    CHECK(a.epi_max_i == 5);

    // with the weaker connectivity offset m the whole range shifts but
    // surjectivity recovers one step
    q.improved_iso = false;
    q.improved_epi = true;
    q.m = 3;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == 4);
    CHECK(a.epi_max_i == 5);
    q.m = 4;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == 3);
    CHECK(a.epi_max_i == 4);

    q = query(RangeFamily::general_abelian, 12);
    q.k = 3;
    q.improved_epi = true;
    q.m = 4;
    a = evaluate_range(q);
    CHECK(a.iso_max_i == 2);
    CHECK(a.epi_max_i == 3);

    RangeQuery c = query(RangeFamily::configurations, 8);
    c.improved_iso = true;
    a = evaluate_range(c);
    CHECK(a.iso_max_i == 4);
    CHECK(a.epi_max_i == 4);
}

TEST_CASE("invalid range queries") {
    RangeQuery q = query(RangeFamily::general_constant, 5);
    q.k = 1;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q = query(RangeFamily::general_abelian, 5);
    q.k = 2;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_range(query(RangeFamily::general_constant, -1)),
                    std::invalid_argument);
    q = query(RangeFamily::general_twisted, 5);
    q.r = -1;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q.r = 0;
    q.N = -1;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q = query(RangeFamily::manifolds, 10);
    q.u = 0;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q = query(RangeFamily::manifolds, 10);
    q.gcase = GenusCase::unequal_factors;
    q.m = -1;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);

    q = query(RangeFamily::general_constant, 10);
    q.k = 3;
    q.improved_iso = true;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q = query(RangeFamily::general_abelian, 10);
    q.k = 3;
    q.improved_iso = true;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q = query(RangeFamily::general_constant, 10);
    q.k = 2;
    q.improved_epi = true;
    q.m = 2;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q = query(RangeFamily::oriented, 10);
    q.improved_epi = true;
    q.m = 3;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
    q = query(RangeFamily::general_constant, 10);
    q.k = 2;
    q.improved_iso = true;
    q.improved_epi = true;
    q.m = 3;
    CHECK_THROWS_AS(evaluate_range(q), std::invalid_argument);
}

TEST_CASE("selector names and helper bounds") {
    CHECK(std::string(selector_name(RangeFamily::general_constant)) == "A-constant");
    CHECK(std::string(selector_name(RangeFamily::general_abelian)) == "A-abelian");
    CHECK(std::string(selector_name(RangeFamily::general_twisted)) == "B-twisted");
    CHECK(std::string(selector_name(RangeFamily::general_split)) == "B-split");
    CHECK(std::string(selector_name(RangeFamily::configurations)) == "C-config");
    CHECK(std::string(selector_name(RangeFamily::oriented)) == "D-oriented");
    CHECK(std::string(selector_name(RangeFamily::manifolds)) == "F-manifold");
    CHECK(std::string(coeff_name(CoeffKind::abelian)) == "abelian");

    CHECK(polycyclic_usr_bound(0) == 3);
    CHECK(polycyclic_usr_bound(2) == 5);
    CHECK_THROWS_AS(polycyclic_usr_bound(-1), std::invalid_argument);
}
