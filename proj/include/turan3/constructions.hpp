#pragma once

#include "turan3/hypergraph.hpp"

namespace turan3 {

/// Complete 3-graph: all C(n,3) triples. n < 3 gives isolated vertices.
Hypergraph complete(int n);

/// Full star: every triple through vertex 0; C(n-1,2) edges. Requires n >= 1.
Hypergraph full_star(int n);

/// All triples meeting {0..m-1}; C(n,3) - C(n-m,3) edges. Requires 0 <= m <= n.
Hypergraph cover(int n, int m);

/// Triangle-free witness containing the linear path: edge {0,1,2}, every
/// {0,1,w}, and every {2,w,w'} avoiding {0,1}. C(n-2,2)+1 edges; n >= 7.
Hypergraph h_cp(int n);

/// Path-free witness containing a 2-matching: a 4-clique on {0,1,2,3} plus a
/// full star centered at 3 on {3,...,n-1}. C(n-4,2)+4 edges; n >= 7.
Hypergraph h_pm(int n);

/// Largest non-star intersecting family: the triple {1,2,3} plus every triple
/// through 0 that meets it. 3n-8 edges; n >= 6.
Hypergraph hilton_milner(int n);

/// Connected path-free graph containing a triangle, with 3n-8 edges: the
/// triangle frame's U-triples minus the ten excluded ones, plus all
/// {x_i,x_j,w} cross edges. n >= 7.
Hypergraph connected_cp_extremal(int n);

long long binomial(int n, int k);

}  // namespace turan3
