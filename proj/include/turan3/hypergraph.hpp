#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan3 {

/// A hyperedge: three distinct vertex indices, stored strictly increasing.
using Triple = std::array<int, 3>;

Triple sorted_triple(int a, int b, int c);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by decode(); line numbers are 1-based positions in the input text.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// A subset of the vertex range [0, n) of some hypergraph.
struct VertexSet {
    std::vector<int> members;  // sorted, no duplicates

    static VertexSet of(std::vector<int> members);
};

/// A 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are strictly increasing triples, stored in lexicographic order with
/// no duplicates, plus an eagerly built per-vertex incidence index. Values
/// are immutable after construction and safe to share between threads.
class Hypergraph {
public:
    Hypergraph() = default;  // the empty hypergraph on 0 vertices

    /// Validates and normalizes the edge list. Vertices inside a triple may
    /// arrive in any order; a repeated vertex inside a triple, a vertex
    /// outside [0, n), or a duplicate triple is an error.
    static Hypergraph make(int n, std::vector<Triple> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }

    /// Indices into edges() of the edges containing v.
    const std::vector<int>& edges_at(int v) const;

    bool has_edge(const Triple& t) const;

    /// Number of edges containing v. Errors if v is out of range.
    int degree(int v) const;

    /// True iff the incidence structure links all n vertices into one
    /// component. An isolated vertex disconnects the graph; the one-vertex
    /// edgeless graph is connected by convention, as is the empty graph.
    bool is_connected() const;

    /// Edges inside S, relabeled onto 0..|S|-1 preserving relative order.
    Hypergraph induced(const VertexSet& s) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::vector<int>> incidence_;

    void build_index();
};

/// Disjoint union: b's vertices are shifted up by a.vertex_count().
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// Text form: header "n m", then one line "a b c" per edge in storage
/// order, LF endings. Lines beginning with '#' are comments.
std::string encode(const Hypergraph& h);
Hypergraph decode(const std::string& text);

}  // namespace turan3
