#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan3/hypergraph.hpp"

namespace turan3 {

/// A small forbidden/required configuration. Containment is always
/// non-induced subhypergraph containment via an injective vertex map.
struct Pattern {
    enum class Kind {
        LinearPath3,   // P3_3: three edges, consecutive ones sharing one vertex
        Triangle,      // C3_3: linear cycle of three edges on six vertices
        Matching,      // M(2s): 2s pairwise disjoint edges (M2, M4, ...)
        F5,            // {a,b,c},{c,d,e},{e,a,b} on five vertices
        Clique4,       // K4_3: all four triples of a 4-set
        MultiPath,     // sP3_3: s vertex-disjoint copies of the linear path
        Custom,
    };

    std::string name;
    Kind kind = Kind::Custom;
    int param = 0;  // s for Matching/MultiPath
    Hypergraph graph;
    std::vector<int> edge_order;  // connectivity-respecting embedding order
};

/// Builds a catalog pattern from its ASCII id: P3_3, C3_3, F5, K4_3,
/// M2, M4, ... (even matchings), or 2P3_3, 3P3_3, ... (disjoint paths).
Pattern build_pattern(const std::string& id);

/// Wraps an arbitrary hypergraph as a pattern.
Pattern custom_pattern(Hypergraph g, std::string name = "custom");

/// An injective map from pattern vertices to host vertices sending every
/// pattern edge to a host edge.
struct Embedding {
    std::vector<int> map;  // indexed by pattern vertex
};

/// First embedding in deterministic (lexicographic) order, or nullopt.
std::optional<Embedding> find_embedding(const Hypergraph& host, const Pattern& p);

/// Independent revalidation of a claimed embedding.
bool is_valid_embedding(const Hypergraph& host, const Pattern& p, const Embedding& e);

bool is_free(const Hypergraph& host, const std::vector<Pattern>& family);
bool contains_some(const Hypergraph& host, const std::vector<Pattern>& family);

}  // namespace turan3
