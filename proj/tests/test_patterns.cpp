#include <doctest.h>

#include <bit>

#include "test_helpers.hpp"
#include "turan3/constructions.hpp"
#include "turan3/patterns.hpp"

using namespace turan3;

namespace {

std::uint32_t mask_of(const Triple& t) { return (1u << t[0]) | (1u << t[1]) | (1u << t[2]); }

int meet(const Triple& a, const Triple& b) { return std::popcount(mask_of(a) & mask_of(b)); }

}  // namespace

TEST_CASE("catalog shapes") {
    Pattern p33 = build_pattern("P3_3");
    CHECK(p33.graph.vertex_count() == 7);
    CHECK(p33.graph.edge_count() == 3);
    {
        const auto& e = p33.graph.edges();
        // consecutive edges share one vertex, the ends are disjoint
        int profile[3] = {meet(e[0], e[1]), meet(e[1], e[2]), meet(e[0], e[2])};
        std::sort(profile, profile + 3);
        CHECK(profile[0] == 0);
        CHECK(profile[1] == 1);
        CHECK(profile[2] == 1);
    }

    Pattern c33 = build_pattern("C3_3");
    CHECK(c33.graph.vertex_count() == 6);
    CHECK(c33.graph.edge_count() == 3);
    {
        const auto& e = c33.graph.edges();
        CHECK(meet(e[0], e[1]) == 1);
        CHECK(meet(e[1], e[2]) == 1);
        CHECK(meet(e[0], e[2]) == 1);
    }

    Pattern m2 = build_pattern("M2");
    CHECK(m2.graph.vertex_count() == 6);
    CHECK(m2.graph.edge_count() == 2);
    CHECK(meet(m2.graph.edges()[0], m2.graph.edges()[1]) == 0);

    Pattern m4 = build_pattern("M4");
    CHECK(m4.graph.vertex_count() == 12);
    CHECK(m4.graph.edge_count() == 4);

    Pattern f5 = build_pattern("F5");
    CHECK(f5.graph.vertex_count() == 5);
    CHECK(f5.graph.edge_count() == 3);

    Pattern k43 = build_pattern("K4_3");
    CHECK(k43.graph.vertex_count() == 4);
    CHECK(k43.graph.edge_count() == 4);

    Pattern twice = build_pattern("2P3_3");
    CHECK(twice.graph.vertex_count() == 14);
    CHECK(twice.graph.edge_count() == 6);

    CHECK_THROWS_AS(build_pattern("M3"), Error);
    CHECK_THROWS_AS(build_pattern("M0"), Error);
    CHECK_THROWS_AS(build_pattern("0P3_3"), Error);
    CHECK_THROWS_AS(build_pattern("nope"), Error);
}

TEST_CASE("embedding examples") {
    Pattern p33 = build_pattern("P3_3");
    auto hit = find_embedding(complete(7), p33);
    REQUIRE(hit.has_value());
    CHECK(is_valid_embedding(complete(7), p33, *hit));

    CHECK_FALSE(find_embedding(complete(6), p33).has_value());
    for (int n = 7; n <= 10; ++n)
        CHECK_FALSE(find_embedding(full_star(n), p33).has_value());
}

TEST_CASE("freeness and containment examples") {
    CHECK(is_free(disjoint_union(complete(6), complete(1)), {build_pattern("P3_3")}));
    CHECK_FALSE(is_free(complete(6), {build_pattern("C3_3")}));
    CHECK(is_free(h_cp(8), {build_pattern("C3_3")}));

    CHECK(contains_some(disjoint_union(complete(6), full_star(4)), {build_pattern("C3_3")}));
    CHECK_FALSE(contains_some(full_star(9), {build_pattern("M2")}));
    CHECK(contains_some(complete(6),
                        {build_pattern("C3_3"), build_pattern("F5"), build_pattern("K4_3")}));
}

TEST_CASE("complete hosts contain a pattern exactly when it fits") {
    for (const char* id : {"P3_3", "C3_3", "M2", "F5", "K4_3"}) {
        Pattern p = build_pattern(id);
        int need = p.graph.vertex_count();
        for (int n = 3; n <= 9; ++n)
            CHECK(find_embedding(complete(n), p).has_value() == (n >= need));
    }
}

TEST_CASE("freeness is monotone under edge removal") {
    auto& r = test_util::rng();
    std::vector<Pattern> family = {build_pattern("C3_3"), build_pattern("M2")};
    int tried = 0;
    while (tried < 10) {
        Hypergraph h = test_util::random_graph(7, 0.15, r);
        if (!is_free(h, family)) continue;
        ++tried;
        std::vector<Triple> edges = h.edges();
        while (!edges.empty()) {
            edges.erase(edges.begin() + std::uniform_int_distribution<size_t>(
                                            0, edges.size() - 1)(r));
            CHECK(is_free(Hypergraph::make(7, edges), family));
        }
    }
}

TEST_CASE("embedding search agrees with the brute-force oracle") {
    std::vector<Pattern> patterns = {build_pattern("C3_3"), build_pattern("M2"),
                                     build_pattern("F5"), build_pattern("K4_3")};
    // exhaustive on five vertices: all 2^10 hosts
    for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
        std::vector<Triple> edges;
        int i = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c, ++i)
                    if (bits & (1u << i)) edges.push_back({a, b, c});
        Hypergraph host = Hypergraph::make(5, std::move(edges));
        for (const Pattern& p : patterns) {
            bool fast = find_embedding(host, p).has_value();
            bool brute = test_util::brute_embeds(host, p.graph);
            CHECK(fast == brute);
        }
    }
    // sampled on six vertices
    auto& r = test_util::rng();
    for (int trial = 0; trial < 300; ++trial) {
        Hypergraph host = test_util::random_graph(6, 0.25, r);
        for (const Pattern& p : patterns)
            CHECK(find_embedding(host, p).has_value() == test_util::brute_embeds(host, p.graph));
    }
}

TEST_CASE("returned embeddings always revalidate") {
    auto& r = test_util::rng();
    std::vector<Pattern> patterns = {build_pattern("P3_3"), build_pattern("C3_3"),
                                     build_pattern("M2"), build_pattern("F5"),
                                     build_pattern("K4_3")};
    for (int trial = 0; trial < 50; ++trial) {
        Hypergraph host = test_util::random_graph(8, 0.3, r);
        for (const Pattern& p : patterns)
            if (auto e = find_embedding(host, p)) CHECK(is_valid_embedding(host, p, *e));
    }
}

TEST_CASE("custom patterns may keep isolated vertices") {
    // a single edge plus two isolated vertices needs a five-vertex host
    Pattern p = custom_pattern(Hypergraph::make(5, {{0, 1, 2}}));
    CHECK_FALSE(find_embedding(complete(4), p).has_value());
    auto e = find_embedding(complete(5), p);
    REQUIRE(e.has_value());
    CHECK(is_valid_embedding(complete(5), p, *e));
}
