#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan3/hypergraph.hpp"
#include "turan3/patterns.hpp"

namespace turan3 {

/// The labeled scaffold around a fixed triangle: degree-2 vertices
/// x1,x2,x3 = 0,1,2, degree-1 vertices y1,y2,y3 = 3,4,5, and outside
/// vertices w1..ws = 6..5+s. Exposes the cross-triple sets T1, T2 and the
/// exclusion sets X1, X2, Y, Z1, Z2 used by the verifiers.
class TriangleFrame {
public:
    explicit TriangleFrame(int s);

    int s() const { return s_; }
    int n() const { return 6 + s_; }
    int x(int i) const { return i - 1; }      // i in 1..3
    int y(int i) const { return 2 + i; }      // i in 1..3
    int w(int l) const { return 5 + l; }      // l in 1..s

    std::vector<Triple> cycle_edges() const;  // the fixed triangle C
    std::vector<Triple> t1() const;           // {x_i, y_i, w_l}
    std::vector<Triple> t2() const;           // {x_i, x_j, w_l}
    std::vector<Triple> t() const;            // t1 union t2
    std::vector<Triple> u_triples() const;    // all triples inside U = {0..5}
    std::vector<Triple> w_triples() const;    // all triples inside W

    std::vector<Triple> x1_set() const;
    std::vector<Triple> x2_set() const;
    std::vector<Triple> y_set() const;
    std::vector<Triple> z1_set() const;
    std::vector<Triple> z2_set() const;

private:
    int s_;
};

struct CheckInstance {
    std::string label;
    bool exempt = false;
    std::string note;                  // exemption reason or failure detail
    std::vector<Triple> added;         // edges laid on top of the triangle
    std::optional<Embedding> witness;  // path embedding, when one was found
    bool passed = false;
    Hypergraph host;                   // the graph the witness embeds into
};

struct VerifyReport {
    std::string check;
    int instances = 0;  // non-exempt instances examined
    int passed = 0;
    int exempt = 0;
    std::vector<CheckInstance> failures;
    std::vector<CheckInstance> details;  // every instance, witnesses included
    std::string note;                    // symmetry argument backing the chosen s

    bool ok() const { return failures.empty(); }
};

/// Every cross triple outside T already forces the path together with C.
VerifyReport verify_cross_edges(int s);

/// A T-edge and an intersecting W-triple force the path together with C.
VerifyReport verify_fact_pusto(int s);

/// A T1-edge and a disjoint T-edge force the path together with C.
VerifyReport verify_fact_disjoint(int s);

/// The five exclusion sets: each listed triple completes a path on top of
/// its witness configuration.
VerifyReport verify_exclusions();

/// Largest edge count of a t x s bipartite graph with no matching of size
/// m+1, found by exhaustive column search; second component reports whether
/// it equals s*m. Requires 1 <= t <= s <= 6 and 0 <= m <= t.
std::pair<int, bool> verify_konig(int t, int s, int m);

/// verify_konig over every t <= s <= max_s, m <= t.
VerifyReport verify_konig_range(int max_s);

struct LemmaBound {
    std::string name;
    long long max_found = -1;
    long long bound = 0;
    bool in_scope = true;  // bounds outside their stated s-range are reported, not asserted
    bool ok = true;
    std::uint64_t nodes = 0;
};

struct LemmaReport {
    int s = 0;
    std::vector<LemmaBound> bounds;
    bool ok() const {
        for (const LemmaBound& b : bounds)
            if (b.in_scope && !b.ok) return false;
        return true;
    }
};

/// Certifies the frame bounds by constrained exhaustive search over
/// path-free subsets of the U-triples and T containing the triangle:
/// the capped totals |H[U]|+|H(U,W)| and the maxima of |H∩T|, |H∩T1|.
LemmaReport verify_lemma_bounds(int s);

/// |T1| = |T2| = 3s and the covering-construction edge-count identity.
VerifyReport verify_counting_identities();

}  // namespace turan3
