#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan3/hypergraph.hpp"

namespace turan3 {

/// Relabeling-invariant normal form: the lexicographically smallest edge
/// list reachable by any permutation of the vertices. Two hypergraphs are
/// isomorphic iff their canonical forms compare equal.
struct CanonicalForm {
    int n = 0;
    std::vector<Triple> edges;

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& other) const {
        if (n != other.n) return n < other.n;
        return edges < other.edges;
    }

    Hypergraph to_hypergraph() const { return Hypergraph::make(n, edges); }
};

CanonicalForm canonical_form(const Hypergraph& h);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Order of the automorphism group (vertex permutations fixing the edge set).
std::uint64_t automorphism_count(const Hypergraph& h);

/// Applies a vertex permutation: perm[old] = new. Must be a bijection.
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm);

}  // namespace turan3
