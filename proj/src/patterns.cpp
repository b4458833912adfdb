#include "turan3/patterns.hpp"

#include <algorithm>
#include <charconv>

namespace turan3 {

namespace {

std::vector<int> embedding_order(const Hypergraph& g) {
    // Edges ordered so each one shares a vertex with the already-covered set
    // when possible; components are therefore contiguous.
    int m = g.edge_count();
    std::vector<int> order;
    std::vector<bool> used(m, false);
    std::vector<bool> covered(g.vertex_count(), false);
    while (static_cast<int>(order.size()) < m) {
        int pick = -1;
        for (int i = 0; i < m; ++i) {
            if (used[i]) continue;
            const Triple& e = g.edges()[i];
            if (covered[e[0]] || covered[e[1]] || covered[e[2]]) {
                pick = i;
                break;
            }
        }
        if (pick < 0)
            for (int i = 0; i < m; ++i)
                if (!used[i]) {
                    pick = i;
                    break;
                }
        used[pick] = true;
        order.push_back(pick);
        for (int v : g.edges()[pick]) covered[v] = true;
    }
    return order;
}

Pattern finish(Pattern p) {
    p.edge_order = embedding_order(p.graph);
    return p;
}

Hypergraph linear_path3() {
    return Hypergraph::make(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
}

Hypergraph triangle() {
    return Hypergraph::make(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
}

Hypergraph matching(int s) {
    std::vector<Triple> edges;
    for (int i = 0; i < 2 * s; ++i) edges.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    return Hypergraph::make(6 * s, std::move(edges));
}

Hypergraph multipath(int s) {
    Hypergraph g;
    for (int i = 0; i < s; ++i) g = disjoint_union(g, linear_path3());
    return g;
}

}  // namespace

Pattern build_pattern(const std::string& id) {
    if (id == "P3_3")
        return finish({id, Pattern::Kind::LinearPath3, 1, linear_path3(), {}});
    if (id == "C3_3")
        return finish({id, Pattern::Kind::Triangle, 0, triangle(), {}});
    if (id == "F5")
        return finish({id, Pattern::Kind::F5, 0,
                       Hypergraph::make(5, {{0, 1, 2}, {2, 3, 4}, {0, 1, 4}}), {}});
    if (id == "K4_3")
        return finish({id, Pattern::Kind::Clique4, 0,
                       Hypergraph::make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), {}});
    if (id.size() > 1 && id[0] == 'M') {
        int size = 0;
        auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), size);
        if (ec == std::errc() && ptr == id.data() + id.size() && size >= 2 && size % 2 == 0)
            return finish({id, Pattern::Kind::Matching, size / 2, matching(size / 2), {}});
        throw Error("invalid matching pattern \"" + id + "\" (want M2, M4, ...)");
    }
    if (auto pos = id.find("P3_3"); pos != std::string::npos && pos > 0 && pos + 4 == id.size()) {
        int s = 0;
        auto [ptr, ec] = std::from_chars(id.data(), id.data() + pos, s);
        if (ec == std::errc() && ptr == id.data() + pos) {
            if (s < 1) throw Error("invalid path multiplicity in \"" + id + "\"");
            if (s == 1) return build_pattern("P3_3");
            return finish({id, Pattern::Kind::MultiPath, s, multipath(s), {}});
        }
    }
    throw Error("unknown pattern id \"" + id + "\"");
}

Pattern custom_pattern(Hypergraph g, std::string name) {
    return finish({std::move(name), Pattern::Kind::Custom, 0, std::move(g), {}});
}

namespace {

struct Embedder {
    const Hypergraph& host;
    const Pattern& pat;
    std::vector<int> vmap;  // pattern vertex -> host vertex, -1 unassigned
    std::vector<bool> used_host;

    Embedder(const Hypergraph& h, const Pattern& p)
        : host(h), pat(p), vmap(p.graph.vertex_count(), -1), used_host(h.vertex_count(), false) {}

    bool assign_isolated() {
        int next = 0;
        for (int pv = 0; pv < pat.graph.vertex_count(); ++pv) {
            if (vmap[pv] >= 0) continue;
            while (next < host.vertex_count() && used_host[next]) ++next;
            if (next == host.vertex_count()) return false;
            vmap[pv] = next;
            used_host[next++] = true;
        }
        return true;
    }

    // Injectively assigns unmapped[i..nu) onto the free slots, then recurses
    // into the next pattern edge.
    bool place(size_t k, const int* unmapped, int nu, int i, const int* slots, int ns,
               bool* slot_taken) {
        if (i == nu) return search(k + 1);
        for (int j = 0; j < ns; ++j) {
            if (slot_taken[j] || used_host[slots[j]]) continue;
            slot_taken[j] = true;
            used_host[slots[j]] = true;
            vmap[unmapped[i]] = slots[j];
            if (place(k, unmapped, nu, i + 1, slots, ns, slot_taken)) return true;
            vmap[unmapped[i]] = -1;
            used_host[slots[j]] = false;
            slot_taken[j] = false;
        }
        return false;
    }

    bool search(size_t k) {
        if (k == pat.edge_order.size()) return assign_isolated();
        const Triple& pe = pat.graph.edges()[pat.edge_order[k]];
        int mapped[3], unmapped[3];
        int nm = 0, nu = 0;
        for (int pv : pe)
            (vmap[pv] >= 0 ? mapped[nm++] : unmapped[nu++]) = pv;

        // Candidate host edges: those through an already-placed image when one
        // exists (choose the image with the shortest incidence list), else all
        // host edges. Ascending edge index = lexicographic order.
        std::vector<int> all;
        const std::vector<int>* cands;
        if (nm > 0) {
            int best = vmap[mapped[0]];
            for (int i = 1; i < nm; ++i) {
                int w = vmap[mapped[i]];
                if (host.edges_at(w).size() < host.edges_at(best).size()) best = w;
            }
            cands = &host.edges_at(best);
        } else {
            all.resize(host.edge_count());
            for (int i = 0; i < host.edge_count(); ++i) all[i] = i;
            cands = &all;
        }

        for (int he_idx : *cands) {
            const Triple& he = host.edges()[he_idx];
            bool images_fit = true;
            for (int i = 0; i < nm && images_fit; ++i) {
                int w = vmap[mapped[i]];
                if (w != he[0] && w != he[1] && w != he[2]) images_fit = false;
            }
            if (!images_fit) continue;
            int slots[3];
            int ns = 0;
            for (int w : he) {
                bool taken = false;
                for (int i = 0; i < nm; ++i)
                    if (vmap[mapped[i]] == w) taken = true;
                if (!taken) slots[ns++] = w;
            }
            if (ns != nu) continue;  // two pattern vertices share a host image
            bool slot_taken[3] = {false, false, false};
            if (place(k, unmapped, nu, 0, slots, ns, slot_taken)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_embedding(const Hypergraph& host, const Pattern& p) {
    if (p.graph.edge_count() == 0) {
        if (host.vertex_count() < p.graph.vertex_count()) return std::nullopt;
        Embedding e;
        e.map.resize(p.graph.vertex_count());
        for (int i = 0; i < p.graph.vertex_count(); ++i) e.map[i] = i;
        return e;
    }
    Embedder emb(host, p);
    if (!emb.search(0)) return std::nullopt;
    return Embedding{std::move(emb.vmap)};
}

bool is_valid_embedding(const Hypergraph& host, const Pattern& p, const Embedding& e) {
    int pn = p.graph.vertex_count();
    if (static_cast<int>(e.map.size()) != pn) return false;
    std::vector<bool> used(host.vertex_count(), false);
    for (int v : e.map) {
        if (v < 0 || v >= host.vertex_count() || used[v]) return false;
        used[v] = true;
    }
    for (const Triple& t : p.graph.edges())
        if (!host.has_edge(sorted_triple(e.map[t[0]], e.map[t[1]], e.map[t[2]]))) return false;
    return true;
}

bool is_free(const Hypergraph& host, const std::vector<Pattern>& family) {
    for (const Pattern& p : family)
        if (find_embedding(host, p)) return false;
    return true;
}

bool contains_some(const Hypergraph& host, const std::vector<Pattern>& family) {
    for (const Pattern& p : family)
        if (find_embedding(host, p)) return true;
    return false;
}

}  // namespace turan3
