#include "turan3/iso.hpp"

#include <algorithm>
#include <numeric>

namespace turan3 {

namespace {

// Search state for the minimal-relabeling DFS. Labels 0..a-1 are handed to
// the non-isolated vertices one at a time; isolated vertices never receive
// small labels in an optimal relabeling, so they are ignored entirely.
struct CanonSearch {
    const Hypergraph& h;
    int n;
    std::vector<int> active;       // vertices with degree >= 1
    std::vector<int> old2new;      // -1 = unassigned
    std::vector<Triple> det;       // determined edges, kept sorted
    std::vector<Triple> best;      // incumbent full edge list
    bool have_best = false;
    std::vector<int> twin_class;   // global twin partition
    int m;

    explicit CanonSearch(const Hypergraph& g)
        : h(g), n(g.vertex_count()), old2new(g.vertex_count(), -1), m(g.edge_count()) {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 0) active.push_back(v);
        compute_twins();
    }

    // u,v are twins when swapping them maps the edge set onto itself.
    bool are_twins(int u, int v) const {
        auto swapped = [&](Triple t) {
            for (int& x : t) {
                if (x == u) x = v;
                else if (x == v) x = u;
            }
            std::sort(t.begin(), t.end());
            return t;
        };
        for (int idx : h.edges_at(u))
            if (!h.has_edge(swapped(h.edges()[idx]))) return false;
        for (int idx : h.edges_at(v))
            if (!h.has_edge(swapped(h.edges()[idx]))) return false;
        return true;
    }

    void compute_twins() {
        twin_class.assign(n, -1);
        int next = 0;
        for (int v : active) {
            if (twin_class[v] >= 0) continue;
            twin_class[v] = next;
            for (int u : active)
                if (u > v && twin_class[u] < 0 && h.degree(u) == h.degree(v) && are_twins(v, u))
                    twin_class[u] = next;
            ++next;
        }
    }

    // Lower bound comparison: every still-undetermined edge will contain a
    // label >= k, so it is >= {0,1,max(k,2)}. If even the optimistic merge of
    // det with such placeholders cannot beat the incumbent, prune.
    bool can_beat_best(int k) const {
        if (!have_best) return true;
        Triple fut{0, 1, std::max(k, 2)};
        size_t i = 0;
        int remaining = m - static_cast<int>(det.size());
        for (const Triple& b : best) {
            const Triple* mine;
            if (i < det.size() && (remaining == 0 || det[i] <= fut)) {
                mine = &det[i];
                ++i;
            } else {
                mine = &fut;
                --remaining;
            }
            if (*mine < b) return true;
            if (b < *mine) return false;
        }
        return false;  // full tie cannot improve
    }

    void assign(int v, int k, std::vector<Triple>& added) {
        old2new[v] = k;
        for (int idx : h.edges_at(v)) {
            const Triple& e = h.edges()[idx];
            if (old2new[e[0]] >= 0 && old2new[e[1]] >= 0 && old2new[e[2]] >= 0) {
                Triple t = sorted_triple(old2new[e[0]], old2new[e[1]], old2new[e[2]]);
                det.insert(std::upper_bound(det.begin(), det.end(), t), t);
                added.push_back(t);
            }
        }
    }

    void unassign(int v, const std::vector<Triple>& added) {
        old2new[v] = -1;
        for (const Triple& t : added)
            det.erase(std::lower_bound(det.begin(), det.end(), t));
    }

    void dfs(int k) {
        if (k == static_cast<int>(active.size())) {
            if (!have_best || det < best) {
                best = det;
                have_best = true;
            }
            return;
        }
        // Candidate order: most edges completed first, then degree, then index.
        struct Cand { int v, completed, deg; };
        std::vector<Cand> cands;
        for (int v : active) {
            if (old2new[v] >= 0) continue;
            int completed = 0;
            for (int idx : h.edges_at(v)) {
                const Triple& e = h.edges()[idx];
                int unassigned = 0;
                for (int x : e)
                    if (old2new[x] < 0) ++unassigned;
                if (unassigned == 1) ++completed;
            }
            cands.push_back({v, completed, h.degree(v)});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.completed != b.completed) return a.completed > b.completed;
            if (a.deg != b.deg) return a.deg > b.deg;
            return a.v < b.v;
        });
        std::vector<int> tried_classes;
        std::vector<Triple> added;
        for (const Cand& c : cands) {
            int cls = twin_class[c.v];
            if (std::find(tried_classes.begin(), tried_classes.end(), cls) != tried_classes.end())
                continue;
            tried_classes.push_back(cls);
            added.clear();
            assign(c.v, k, added);
            if (can_beat_best(k + 1)) dfs(k + 1);
            unassign(c.v, added);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h) {
    if (h.edge_count() == 0) return CanonicalForm{h.vertex_count(), {}};
    CanonSearch search(h);
    search.dfs(0);
    return CanonicalForm{h.vertex_count(), std::move(search.best)};
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

// Counts bijections of the active vertices preserving the edge set.
struct AutCount {
    const Hypergraph& h;
    std::vector<int> active;
    std::vector<int> map;        // old -> old, -1 unassigned
    std::vector<bool> used;
    std::uint64_t count = 0;

    explicit AutCount(const Hypergraph& g)
        : h(g), map(g.vertex_count(), -1), used(g.vertex_count(), false) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0) active.push_back(v);
    }

    bool consistent(int v) const {
        for (int idx : h.edges_at(v)) {
            const Triple& e = h.edges()[idx];
            if (map[e[0]] >= 0 && map[e[1]] >= 0 && map[e[2]] >= 0 &&
                !h.has_edge(sorted_triple(map[e[0]], map[e[1]], map[e[2]])))
                return false;
        }
        return true;
    }

    void dfs(size_t i) {
        if (i == active.size()) {
            ++count;
            return;
        }
        int v = active[i];
        for (int w : active) {
            if (used[w] || h.degree(w) != h.degree(v)) continue;
            map[v] = w;
            used[w] = true;
            if (consistent(v)) dfs(i + 1);
            used[w] = false;
            map[v] = -1;
        }
    }
};

}  // namespace

std::uint64_t automorphism_count(const Hypergraph& h) {
    AutCount aut(h);
    aut.dfs(0);
    std::uint64_t result = aut.count;
    int isolated = h.vertex_count() - static_cast<int>(aut.active.size());
    for (int i = 2; i <= isolated; ++i) result *= static_cast<std::uint64_t>(i);
    return result;
}

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    int n = h.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw Error("relabel: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw Error("relabel: not a bijection on [0,n)");
        seen[p] = true;
    }
    std::vector<Triple> edges;
    edges.reserve(h.edge_count());
    for (const Triple& t : h.edges())
        edges.push_back(sorted_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
    return Hypergraph::make(n, std::move(edges));
}

}  // namespace turan3
