#include "turan3/constructions.hpp"

namespace turan3 {

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Hypergraph complete(int n) {
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) edges.push_back({a, b, c});
    return Hypergraph::make(n, std::move(edges));
}

Hypergraph full_star(int n) {
    if (n < 1) throw Error("full_star: need n >= 1");
    std::vector<Triple> edges;
    for (int b = 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) edges.push_back({0, b, c});
    return Hypergraph::make(n, std::move(edges));
}

Hypergraph cover(int n, int m) {
    if (m < 0 || m > n) throw Error("cover: need 0 <= m <= n");
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (a < m) edges.push_back({a, b, c});  // triples are sorted, so min entry is a
    return Hypergraph::make(n, std::move(edges));
}

Hypergraph h_cp(int n) {
    if (n < 7) throw Error("h_cp: need n >= 7");
    std::vector<Triple> edges;
    edges.push_back({0, 1, 2});
    for (int w = 3; w < n; ++w) edges.push_back({0, 1, w});
    for (int w = 3; w < n; ++w)
        for (int w2 = w + 1; w2 < n; ++w2) edges.push_back({2, w, w2});
    return Hypergraph::make(n, std::move(edges));
}

Hypergraph h_pm(int n) {
    if (n < 7) throw Error("h_pm: need n >= 7");
    std::vector<Triple> edges = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int b = 4; b < n; ++b)
        for (int c = b + 1; c < n; ++c) edges.push_back({3, b, c});
    return Hypergraph::make(n, std::move(edges));
}

Hypergraph hilton_milner(int n) {
    if (n < 6) throw Error("hilton_milner: need n >= 6");
    std::vector<Triple> edges = {{1, 2, 3}};
    for (int b = 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
            if (b <= 3 || c <= 3) edges.push_back({0, b, c});
    return Hypergraph::make(n, std::move(edges));
}

Hypergraph connected_cp_extremal(int n) {
    if (n < 7) throw Error("connected_cp_extremal: need n >= 7");
    // Frame labels: x1,x2,x3 = 0,1,2 and y1,y2,y3 = 3,4,5. Excluded from the
    // U-triples: {y1,y2,y3} and every {y_i,y_j,x_k}.
    std::vector<Triple> edges;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                int ys = (a >= 3) + (b >= 3) + (c >= 3);
                if (ys <= 1) edges.push_back({a, b, c});
            }
    for (int w = 6; w < n; ++w) {
        edges.push_back({0, 1, w});
        edges.push_back({0, 2, w});
        edges.push_back({1, 2, w});
    }
    return Hypergraph::make(n, std::move(edges));
}

}  // namespace turan3
