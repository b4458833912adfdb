#pragma once

// Brute-force oracles and generators shared by the test suites. The oracles
// deliberately avoid the library's search strategies: canonical forms by
// full permutation sweep, embeddings by raw injective-map enumeration.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "turan3/hypergraph.hpp"
#include "turan3/iso.hpp"

namespace test_util {

using turan3::CanonicalForm;
using turan3::Hypergraph;
using turan3::Triple;

inline std::mt19937& rng() {
    static std::mt19937 r(20250809);
    return r;
}

inline Hypergraph random_graph(int n, double edge_prob, std::mt19937& r) {
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (coin(r)) edges.push_back({a, b, c});
    return Hypergraph::make(n, std::move(edges));
}

inline std::vector<int> random_perm(int n, std::mt19937& r) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), r);
    return perm;
}

// Minimal edge list over every one of the n! relabelings. Usable for n <= 8.
inline CanonicalForm brute_canonical(const Hypergraph& h) {
    int n = h.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Triple> best;
    bool have = false;
    do {
        std::vector<Triple> edges;
        edges.reserve(h.edge_count());
        for (const Triple& t : h.edges())
            edges.push_back(turan3::sorted_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
        std::sort(edges.begin(), edges.end());
        if (!have || edges < best) {
            best = std::move(edges);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalForm{n, best};
}

// Does any injective vertex map carry every pattern edge onto a host edge?
inline bool brute_embeds(const Hypergraph& host, const Hypergraph& pattern) {
    int pn = pattern.vertex_count();
    int hn = host.vertex_count();
    if (pn > hn) return false;
    std::vector<int> map(pn, -1);
    std::vector<bool> used(hn, false);
    auto rec = [&](auto&& self, int pv) -> bool {
        if (pv == pn) {
            for (const Triple& t : pattern.edges())
                if (!host.has_edge(turan3::sorted_triple(map[t[0]], map[t[1]], map[t[2]])))
                    return false;
            return true;
        }
        for (int hv = 0; hv < hn; ++hv) {
            if (used[hv]) continue;
            used[hv] = true;
            map[pv] = hv;
            if (self(self, pv + 1)) return true;
            used[hv] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

inline std::uint64_t brute_automorphisms(const Hypergraph& h) {
    int n = h.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        std::vector<Triple> edges;
        edges.reserve(h.edge_count());
        for (const Triple& t : h.edges())
            edges.push_back(turan3::sorted_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
        std::sort(edges.begin(), edges.end());
        if (edges == h.edges()) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace test_util
