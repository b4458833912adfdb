#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "turan3/hypergraph.hpp"
#include "turan3/iso.hpp"
#include "turan3/patterns.hpp"

namespace turan3 {

inline constexpr const char* kEngineVersion = "1.0.0";

/// A constrained extremal-search instance: maximize edges over n-vertex
/// hypergraphs avoiding every forbidden pattern, subject to the optional
/// side constraints.
struct SearchProblem {
    int n = 0;
    std::vector<Pattern> forbidden;
    std::vector<Pattern> required;  // graph must contain some member
    bool connected = false;
    std::optional<Hypergraph> exclude_subgraph_of;  // graph must not embed into this
    std::optional<Hypergraph> anchor;  // fixed labeled subgraph rooting the search
    int max_n = 10;                    // soft limit; 14 is the hard ceiling
    int jobs = 1;
    int iso_reject_max_edges = 4;      // orbit filter window; <=0 disables
    bool use_anchoring = true;         // required-family searches root at anchored copies
    std::vector<Hypergraph> seeds;     // extra lower-bound witnesses (validated before use)
};

struct SearchResult {
    std::optional<int> max_edges;         // nullopt = no graph satisfies the constraints
    std::vector<CanonicalForm> extremal;  // all optima, deduplicated and sorted
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

SearchResult extremal_search(const SearchProblem& p);

/// Re-validates a result against its problem using only the core and
/// pattern modules: every listed graph has exactly max_edges edges, avoids
/// the forbidden patterns, and meets the side constraints.
bool certify(const SearchResult& r, const SearchProblem& p);

/// Memo interface backed by the results store.
class SearchMemo {
public:
    virtual ~SearchMemo() = default;
    virtual std::optional<SearchResult> lookup(const std::string& fingerprint) = 0;
    virtual void record(const std::string& fingerprint, const SearchProblem& p,
                        const SearchResult& r) = 0;
};

std::string problem_fingerprint(int n, const std::vector<Pattern>& forbidden,
                                const std::vector<Pattern>& required, bool connected,
                                bool second_order);

struct SearchOptions {
    SearchMemo* memo = nullptr;
    int jobs = 1;
    int max_n = 10;
};

/// ex_3(n; F): plain Turán search.
SearchResult turan(int n, const std::vector<Pattern>& forbidden, const SearchOptions& = {});

/// ex_3(n; F | G): optimum over F-free graphs containing some member of G,
/// optionally restricted to connected graphs.
SearchResult conditional_turan(int n, const std::vector<Pattern>& forbidden,
                               const std::vector<Pattern>& required, bool connected = false,
                               const SearchOptions& = {});

/// Second-order Turán number: optimum over F-free graphs not embeddable into
/// the unique F-extremal graph. Errors when the extremal family is not a
/// singleton or is complete.
SearchResult second_order(int n, const std::vector<Pattern>& forbidden,
                          const SearchOptions& = {});

/// Labeled search over an explicit candidate set rooted at a fixed edge set;
/// the primitive behind the frame-bound certifications.
struct RestrictedProblem {
    int n = 0;
    std::vector<Triple> base;        // always present
    std::vector<Triple> candidates;  // subsets of these are explored
    std::vector<Pattern> forbidden;
    std::function<bool(int, const std::vector<Triple>&)> feasible;  // may be empty
    int jobs = 1;
    int iso_reject_max_edges = 4;
    bool candidates_isolated_symmetric = true;
};

struct RestrictedResult {
    std::optional<int> max_edges;  // total, including base edges
    std::vector<std::vector<Triple>> optimal;
    std::uint64_t nodes = 0;
};

RestrictedResult restricted_search(const RestrictedProblem& p);

}  // namespace turan3
