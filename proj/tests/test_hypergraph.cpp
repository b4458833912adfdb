#include <doctest.h>

#include "test_helpers.hpp"
#include "turan3/constructions.hpp"
#include "turan3/hypergraph.hpp"
#include "turan3/patterns.hpp"

using namespace turan3;

TEST_CASE("make validates and normalizes") {
    Hypergraph h = Hypergraph::make(3, {{2, 0, 1}});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.edges()[0] == Triple{0, 1, 2});

    CHECK(complete(6).edge_count() == 20);

    CHECK_THROWS_AS(Hypergraph::make(4, {{0, 1, 1}}), Error);
    CHECK_THROWS_AS(Hypergraph::make(3, {{0, 1, 5}}), Error);
    CHECK_THROWS_AS(Hypergraph::make(4, {{0, 1, 2}, {2, 1, 0}}), Error);  // duplicate
    CHECK_THROWS_AS(Hypergraph::make(-1, {}), Error);
    CHECK_NOTHROW(Hypergraph::make(0, {}));
}

TEST_CASE("edge list stays strictly sorted") {
    Hypergraph h = Hypergraph::make(6, {{3, 4, 5}, {0, 1, 2}, {0, 2, 4}});
    for (int i = 0; i + 1 < h.edge_count(); ++i) CHECK(h.edges()[i] < h.edges()[i + 1]);
    for (const Triple& t : h.edges()) {
        CHECK(t[0] < t[1]);
        CHECK(t[1] < t[2]);
    }
}

TEST_CASE("degree") {
    Hypergraph c33 = build_pattern("C3_3").graph;
    CHECK(c33.degree(0) == 2);  // cycle connector
    CHECK(c33.degree(1) == 1);  // pendant
    CHECK(full_star(8).degree(0) == 21);
    CHECK_THROWS_AS(c33.degree(6), Error);
    CHECK_THROWS_AS(c33.degree(-1), Error);
}

TEST_CASE("degree sum is three times the edge count") {
    auto& r = test_util::rng();
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph h = test_util::random_graph(7, 0.3, r);
        long long sum = 0;
        for (int v = 0; v < h.vertex_count(); ++v) sum += h.degree(v);
        CHECK(sum == 3LL * h.edge_count());
    }
}

TEST_CASE("connectivity counts isolated vertices as disconnecting") {
    CHECK(full_star(9).is_connected());
    CHECK_FALSE(disjoint_union(complete(6), complete(1)).is_connected());
    CHECK_FALSE(Hypergraph::make(6, {{0, 1, 2}, {3, 4, 5}}).is_connected());
    CHECK(Hypergraph::make(1, {}).is_connected());
    CHECK(Hypergraph::make(3, {{0, 1, 2}}).is_connected());
    CHECK_FALSE(Hypergraph::make(4, {{0, 1, 2}}).is_connected());
}

TEST_CASE("disjoint union shifts and concatenates") {
    Hypergraph a = complete(6);
    Hypergraph b = complete(1);
    Hypergraph u = disjoint_union(a, b);
    CHECK(u.vertex_count() == 7);
    CHECK(u.edge_count() == 20);

    Hypergraph big = disjoint_union(complete(6), full_star(8));
    CHECK(big.vertex_count() == 14);
    CHECK(big.edge_count() == 41);

    Hypergraph empty;
    CHECK(disjoint_union(a, empty) == a);
}

TEST_CASE("induced subhypergraph") {
    Hypergraph k6 = complete(6);
    CHECK(k6.induced(VertexSet::of({0, 2, 3, 5})).edge_count() == 4);

    Hypergraph k6k1 = disjoint_union(complete(6), complete(1));
    CHECK(k6k1.induced(VertexSet::of({0, 1, 2, 3, 4, 5})) == complete(6));

    // pendant vertices of the triangle span no edge
    Hypergraph c33 = build_pattern("C3_3").graph;
    Hypergraph pendants = c33.induced(VertexSet::of({1, 3, 5}));
    CHECK(pendants.vertex_count() == 3);
    CHECK(pendants.edge_count() == 0);

    CHECK_THROWS_AS(k6.induced(VertexSet::of({0, 9})), Error);
}

TEST_CASE("text round trip is bit exact") {
    Hypergraph h = Hypergraph::make(3, {{0, 1, 2}});
    CHECK(encode(h) == "3 1\n0 1 2\n");
    CHECK(decode("3 1\n0 1 2\n") == h);
    CHECK(decode(encode(complete(6))) == complete(6));
    CHECK(encode(Hypergraph::make(0, {})) == "0 0\n");
    CHECK(decode("0 0\n") == Hypergraph::make(0, {}));
    CHECK(decode("# a comment\n3 1\n# another\n0 1 2\n") == h);

    auto& r = test_util::rng();
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = test_util::random_graph(8, 0.25, r);
        CHECK(decode(encode(g)) == g);
    }
}

TEST_CASE("decode reports line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            decode(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("3 1\n0 1 5\n") == 2);
    CHECK(line_of("bogus\n") == 1);
    CHECK(line_of("3 2\n0 1 2\n") > 0);          // missing edge line
    CHECK(line_of("3 1\n0 1 2\n0 1 2\n") == 3);  // extra edge line
    CHECK(line_of("4 2\n0 1 3\n0 1 2\n") == 3);  // out of order
    CHECK(line_of("3 1\n2 1 0\n") == 2);         // not increasing
    CHECK(line_of("") == 1);
    CHECK(line_of("3 1\n0 1 2 9\n") == 2);  // too many tokens
}

TEST_CASE("vertex set normalizes") {
    VertexSet s = VertexSet::of({3, 1, 3, 2});
    CHECK(s.members == std::vector<int>{1, 2, 3});
}
