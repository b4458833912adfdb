#include <doctest.h>

#include "test_helpers.hpp"
#include "turan3/constructions.hpp"
#include "turan3/iso.hpp"
#include "turan3/patterns.hpp"

using namespace turan3;

TEST_CASE("closed-form edge counts hold up to n = 30") {
    for (int n = 0; n <= 30; ++n) {
        CHECK(complete(n).edge_count() == binomial(n, 3));
        if (n >= 1) CHECK(full_star(n).edge_count() == binomial(n - 1, 2));
        for (int m = 0; m <= n; m += 3)
            CHECK(cover(n, m).edge_count() == binomial(n, 3) - binomial(n - m, 3));
        if (n >= 7) {
            CHECK(h_cp(n).edge_count() == binomial(n - 2, 2) + 1);
            CHECK(h_pm(n).edge_count() == binomial(n - 4, 2) + 4);
            CHECK(connected_cp_extremal(n).edge_count() == 3 * n - 8);
        }
        if (n >= 6) CHECK(hilton_milner(n).edge_count() == 3 * n - 8);
    }
}

TEST_CASE("spot values") {
    CHECK(complete(3).edge_count() == 1);
    CHECK(complete(2).edge_count() == 0);
    CHECK(full_star(8).edge_count() == 21);
    CHECK(full_star(3).edge_count() == 1);
    CHECK(full_star(14).edge_count() == 78);
    CHECK(cover(7, 3).edge_count() == 31);
    CHECK(cover(7, 7).edge_count() == binomial(7, 3));
    CHECK(h_cp(10).edge_count() == 29);
    CHECK(h_pm(11).edge_count() == 25);
    CHECK(hilton_milner(7).edge_count() == 13);
    CHECK(connected_cp_extremal(9).edge_count() == 19);
}

TEST_CASE("freeness and containment claims hold for every buildable n <= 12") {
    Pattern p33 = build_pattern("P3_3");
    Pattern c33 = build_pattern("C3_3");
    Pattern m2 = build_pattern("M2");
    for (int n = 7; n <= 12; ++n) {
        CAPTURE(n);
        Hypergraph cp = h_cp(n);
        CHECK(is_free(cp, {c33}));
        CHECK(contains_some(cp, {p33}));

        Hypergraph pm = h_pm(n);
        CHECK(is_free(pm, {p33}));
        CHECK(contains_some(pm, {m2}));

        Hypergraph con = connected_cp_extremal(n);
        CHECK(is_free(con, {p33}));
        CHECK(contains_some(con, {c33}));
        CHECK(con.is_connected());
    }
}

TEST_CASE("hilton_milner is intersecting but not a star") {
    for (int n = 6; n <= 12; ++n) {
        CAPTURE(n);
        Hypergraph hm = hilton_milner(n);
        // oracle: every pair of edges meets
        for (int i = 0; i < hm.edge_count(); ++i)
            for (int j = i + 1; j < hm.edge_count(); ++j) {
                const Triple &a = hm.edges()[i], &b = hm.edges()[j];
                bool meets = false;
                for (int u : a)
                    for (int v : b)
                        if (u == v) meets = true;
                CHECK(meets);
            }
        CHECK(is_free(hm, {build_pattern("M2")}));
        bool star = false;
        for (int v = 0; v < n; ++v)
            if (hm.degree(v) == hm.edge_count()) star = true;
        CHECK_FALSE(star);
    }
}

TEST_CASE("cover of a single vertex is the full star") {
    for (int n = 3; n <= 10; ++n) CHECK(are_isomorphic(cover(n, 1), full_star(n)));
}

TEST_CASE("constructor preconditions") {
    CHECK_THROWS_AS(h_cp(6), Error);
    CHECK_THROWS_AS(h_pm(6), Error);
    CHECK_THROWS_AS(hilton_milner(5), Error);
    CHECK_THROWS_AS(connected_cp_extremal(6), Error);
    CHECK_THROWS_AS(full_star(0), Error);
    CHECK_THROWS_AS(cover(5, 6), Error);
    CHECK_THROWS_AS(cover(5, -1), Error);
}
