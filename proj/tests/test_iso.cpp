#include <doctest.h>

#include "test_helpers.hpp"
#include "turan3/constructions.hpp"
#include "turan3/iso.hpp"
#include "turan3/patterns.hpp"

using namespace turan3;

TEST_CASE("canonical form is invariant under relabeling") {
    auto& r = test_util::rng();
    std::vector<Hypergraph> samples = {
        build_pattern("C3_3").graph,
        build_pattern("P3_3").graph,
        disjoint_union(complete(6), complete(1)),
        full_star(7),
        hilton_milner(7),
    };
    for (int trial = 0; trial < 5; ++trial) samples.push_back(test_util::random_graph(7, 0.3, r));
    for (const Hypergraph& h : samples) {
        CanonicalForm base = canonical_form(h);
        for (int i = 0; i < 50; ++i) {
            Hypergraph g = relabel(h, test_util::random_perm(h.vertex_count(), r));
            CHECK(canonical_form(g) == base);
        }
    }
}

TEST_CASE("canonical form matches the brute-force minimum") {
    auto& r = test_util::rng();
    std::vector<Hypergraph> samples = {
        build_pattern("C3_3").graph, complete(5),          full_star(6),
        Hypergraph::make(6, {}),     hilton_milner(6),
    };
    for (int trial = 0; trial < 12; ++trial) samples.push_back(test_util::random_graph(6, 0.3, r));
    for (int trial = 0; trial < 4; ++trial) samples.push_back(test_util::random_graph(7, 0.2, r));
    for (const Hypergraph& h : samples) {
        CanonicalForm mine = canonical_form(h);
        CanonicalForm brute = test_util::brute_canonical(h);
        CHECK(mine == brute);
    }
}

TEST_CASE("isomorphism examples") {
    Hypergraph s8 = full_star(8);
    std::vector<int> perm = {5, 1, 2, 3, 4, 0, 6, 7};  // move the center to vertex 5
    CHECK(are_isomorphic(s8, relabel(s8, perm)));

    Hypergraph k6k1 = disjoint_union(complete(6), complete(1));
    Hypergraph s7 = full_star(7);
    CHECK(k6k1.edge_count() == 20);
    CHECK(s7.edge_count() == 15);
    CHECK_FALSE(are_isomorphic(k6k1, s7));

    Hypergraph h = test_util::random_graph(6, 0.4, test_util::rng());
    CHECK(are_isomorphic(h, h));
}

TEST_CASE("isomorphism is an equivalence on a random sample") {
    auto& r = test_util::rng();
    std::vector<Hypergraph> pool;
    for (int i = 0; i < 6; ++i) pool.push_back(test_util::random_graph(6, 0.3, r));
    for (const Hypergraph& a : pool)
        for (const Hypergraph& b : pool) {
            CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
            for (const Hypergraph& c : pool)
                if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
        }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(Hypergraph::make(5, {})) == 120);
    CHECK(automorphism_count(Hypergraph::make(3, {{0, 1, 2}})) == 6);

    Hypergraph c33 = build_pattern("C3_3").graph;
    std::uint64_t brute = test_util::brute_automorphisms(c33);
    CHECK(automorphism_count(c33) == brute);
    CHECK(brute == 6);  // the symmetric group of the connector triangle

    auto& r = test_util::rng();
    for (int trial = 0; trial < 8; ++trial) {
        Hypergraph h = test_util::random_graph(6, 0.3, r);
        CHECK(automorphism_count(h) == test_util::brute_automorphisms(h));
    }
}

TEST_CASE("automorphism count divides n!") {
    auto factorial = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    auto& r = test_util::rng();
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph h = test_util::random_graph(7, 0.25, r);
        CHECK(factorial(7) % automorphism_count(h) == 0);
    }
}

TEST_CASE("disjoint union is associative up to isomorphism") {
    auto& r = test_util::rng();
    for (int trial = 0; trial < 5; ++trial) {
        Hypergraph a = test_util::random_graph(3, 0.5, r);
        Hypergraph b = test_util::random_graph(3, 0.5, r);
        Hypergraph c = test_util::random_graph(3, 0.5, r);
        CHECK(are_isomorphic(disjoint_union(disjoint_union(a, b), c),
                             disjoint_union(a, disjoint_union(b, c))));
    }
}

TEST_CASE("relabel validates permutations") {
    Hypergraph h = complete(4);
    CHECK_THROWS_AS(relabel(h, {0, 1, 2}), Error);
    CHECK_THROWS_AS(relabel(h, {0, 1, 2, 2}), Error);
    CHECK_THROWS_AS(relabel(h, {0, 1, 2, 7}), Error);
}
