#include "turan3/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "turan3/constructions.hpp"

namespace turan3 {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kHardMaxN = 14;

int pack(const Triple& t) { return (t[0] << 8) | (t[1] << 4) | t[2]; }

std::uint32_t mask_of(const Triple& t) { return (1u << t[0]) | (1u << t[1]) | (1u << t[2]); }

int pc(std::uint32_t x) { return std::popcount(x); }

// Three distinct edges form the linear path iff some ordering has
// intersection profile (1,1,0); seven vertices then come for free.
bool forms_path3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    int ab = pc(a & b), ac = pc(a & c), bc = pc(b & c);
    return (ab == 1 && bc == 1 && ac == 0) || (ab == 1 && ac == 1 && bc == 0) ||
           (ac == 1 && bc == 1 && ab == 0);
}

bool forms_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return pc(a & b) == 1 && pc(a & c) == 1 && pc(b & c) == 1 && pc(a | b | c) == 6;
}

bool forms_f5(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (pc(a | b | c) != 5) return false;
    int ab = pc(a & b), ac = pc(a & c), bc = pc(b & c);
    return (ab == 2) + (ac == 2) + (bc == 2) == 1 && (ab == 1) + (ac == 1) + (bc == 1) == 2;
}

bool has_disjoint_packing(const std::vector<std::uint32_t>& masks, std::uint32_t used, int need,
                          size_t from) {
    if (need == 0) return true;
    for (size_t i = from; i < masks.size(); ++i)
        if (!(masks[i] & used) && has_disjoint_packing(masks, used | masks[i], need - 1, i + 1))
            return true;
    return false;
}

std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

bool has_universal_vertex(const Hypergraph& h) {
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == h.edge_count()) return true;
    return h.edge_count() == 0;
}

// Union-find connectivity over an explicit edge list, spanning all n vertices.
bool connected_span(int n, const std::vector<Triple>& edges) {
    if (n <= 1) return true;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Triple& t : edges) {
        parent[find(t[1])] = find(t[0]);
        parent[find(t[2])] = find(t[0]);
    }
    int root = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != root) return false;
    return true;
}

// Enumerates edge-set-preserving permutations of the vertices active in S
// that also fix the anchor edge set; inactive vertices map to -1. Returns an
// empty list when the group exceeds the cap (callers then skip the filter).
struct PartialAuts {
    std::vector<std::vector<int>> perms;
    bool capped = false;
};

PartialAuts partial_automorphisms(int n, const std::vector<Triple>& s, size_t anchor_count,
                                  size_t cap) {
    PartialAuts out;
    std::vector<int> deg(n, 0);
    for (const Triple& t : s)
        for (int v : t) ++deg[v];
    std::vector<int> active;
    for (int v = 0; v < n; ++v)
        if (deg[v] > 0) active.push_back(v);

    std::unordered_set<int> skeys, akeys;
    for (size_t i = 0; i < s.size(); ++i) skeys.insert(pack(s[i]));
    for (size_t i = 0; i < anchor_count; ++i) akeys.insert(pack(s[i]));

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);

    auto edge_ok = [&](const Triple& e) {
        if (map[e[0]] < 0 || map[e[1]] < 0 || map[e[2]] < 0) return true;
        return skeys.count(pack(sorted_triple(map[e[0]], map[e[1]], map[e[2]]))) > 0;
    };

    std::vector<std::vector<int>> edges_at(n);
    for (size_t i = 0; i < s.size(); ++i)
        for (int v : s[i]) edges_at[v].push_back(static_cast<int>(i));

    auto dfs = [&](auto&& self, size_t i) -> bool {
        if (out.capped) return false;
        if (i == active.size()) {
            for (size_t j = 0; j < anchor_count; ++j) {
                const Triple& e = s[j];
                if (!akeys.count(pack(sorted_triple(map[e[0]], map[e[1]], map[e[2]]))))
                    return true;  // preserves S but moves the anchor; discard
            }
            if (out.perms.size() >= cap) {
                out.capped = true;
                return false;
            }
            out.perms.push_back(map);
            return true;
        }
        int v = active[i];
        for (int w : active) {
            if (used[w] || deg[w] != deg[v]) continue;
            map[v] = w;
            used[w] = true;
            bool ok = true;
            for (int ei : edges_at[v])
                if (!edge_ok(s[ei])) {
                    ok = false;
                    break;
                }
            if (ok) self(self, i + 1);
            used[w] = false;
            map[v] = -1;
            if (out.capped) return false;
        }
        return true;
    };
    dfs(dfs, 0);
    if (out.capped) out.perms.clear();
    return out;
}

struct EngineIn {
    int n = 0;
    std::vector<Triple> anchor;
    std::vector<Triple> cands;
    std::vector<Pattern> forbidden;
    std::function<bool(int, const std::vector<Triple>&)> feasible;  // may be empty
    int seed_value = -1;
    int iso_max_extra = 4;
    int jobs = 1;
    bool universe_all = false;  // candidates are exactly all triples, no anchor
    bool iso_filter_allowed = true;
};

struct EngineOut {
    int best = -1;
    std::vector<std::vector<Triple>> optimal;
    std::uint64_t nodes = 0;
};

struct Found {
    int value;
    std::vector<Triple> edges;
};

struct FrontierNode {
    std::vector<Triple> edges;
    std::vector<int> live;
};

class Engine {
public:
    explicit Engine(const EngineIn& in) : in_(in), incumbent_(in.seed_value) {
        cand_masks_.reserve(in_.cands.size());
        for (const Triple& t : in_.cands) {
            cand_masks_.push_back(mask_of(t));
            universe_keys_.insert(pack(t));
        }
    }

    EngineOut run();

private:
    friend struct Worker;
    const EngineIn& in_;
    std::vector<std::uint32_t> cand_masks_;
    std::unordered_set<int> universe_keys_;
    std::atomic<int> incumbent_;
    std::atomic<size_t> frontier_next_{0};

    bool feasible(const std::vector<Triple>& edges) const {
        return !in_.feasible || in_.feasible(in_.n, edges);
    }
};

struct Worker {
    Engine& eng;
    const EngineIn& in;
    std::vector<Triple> edges;  // anchor followed by included candidates
    std::vector<std::uint32_t> emasks;
    std::unordered_set<int> ekeys;
    std::vector<std::vector<int>> pool;
    std::vector<Found> found;
    std::vector<FrontierNode>* frontier = nullptr;
    int spill_depth = -1;
    std::uint64_t nodes = 0;

    // one-entry automorphism cache; hit by exclude chains sharing S
    std::vector<Triple> aut_for;
    std::vector<std::vector<int>> auts;
    bool aut_usable = false;
    std::vector<int> isolated_sorted;

    explicit Worker(Engine& e) : eng(e), in(e.in_) {
        pool.resize(in.cands.size() + 2);
        reset(in.anchor);
    }

    void reset(const std::vector<Triple>& s) {
        edges = s;
        emasks.clear();
        ekeys.clear();
        for (const Triple& t : edges) {
            emasks.push_back(mask_of(t));
            ekeys.insert(pack(t));
        }
        aut_usable = false;
    }

    void push_edge(int ci) {
        edges.push_back(in.cands[ci]);
        emasks.push_back(eng.cand_masks_[ci]);
        ekeys.insert(pack(in.cands[ci]));
        aut_usable = false;
    }

    void pop_edge() {
        ekeys.erase(pack(edges.back()));
        edges.pop_back();
        emasks.pop_back();
        aut_usable = false;
    }

    // Would adding candidate u to the current S (whose newest edge is e)
    // complete a forbidden pattern? Only configurations using both u and the
    // newest edge need checking; everything else was filtered earlier.
    bool conflicts(int u_idx, std::uint32_t e_mask) const {
        std::uint32_t u = eng.cand_masks_[u_idx];
        for (const Pattern& p : in.forbidden) {
            switch (p.kind) {
                case Pattern::Kind::LinearPath3:
                    for (std::uint32_t f : emasks)
                        if (forms_path3(u, e_mask, f)) return true;
                    break;
                case Pattern::Kind::Triangle:
                    for (std::uint32_t f : emasks)
                        if (forms_triangle(u, e_mask, f)) return true;
                    break;
                case Pattern::Kind::F5:
                    for (std::uint32_t f : emasks)
                        if (forms_f5(u, e_mask, f)) return true;
                    break;
                case Pattern::Kind::Matching: {
                    if (u & e_mask) break;
                    if (p.param == 1) return true;  // two disjoint edges suffice
                    if (has_disjoint_packing(emasks, u | e_mask, 2 * p.param - 2, 0)) return true;
                    break;
                }
                case Pattern::Kind::Clique4: {
                    if (pc(u & e_mask) != 2) break;
                    const Triple& ut = in.cands[u_idx];
                    std::uint32_t shared = u & e_mask;
                    int c = std::countr_zero(u & ~shared);
                    int d = std::countr_zero(e_mask & ~shared);
                    int a = std::countr_zero(shared);
                    int b = std::countr_zero(shared & (shared - 1) ? shared & ~(1u << a) : shared);
                    (void)ut;
                    if (ekeys.count(pack(sorted_triple(a, c, d))) &&
                        ekeys.count(pack(sorted_triple(b, c, d))))
                        return true;
                    break;
                }
                case Pattern::Kind::MultiPath:
                case Pattern::Kind::Custom: {
                    std::vector<Triple> tmp = edges;
                    tmp.push_back(in.cands[u_idx]);
                    if (!is_free(Hypergraph::make(in.n, std::move(tmp)), {p})) return true;
                    break;
                }
            }
        }
        return false;
    }

    void maybe_collect() {
        int value = static_cast<int>(edges.size());
        int cur = eng.incumbent_.load(std::memory_order_relaxed);
        if (value < cur) return;
        if (!eng.feasible(edges)) return;
        while (value > cur &&
               !eng.incumbent_.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
        }
        found.push_back({value, edges});
    }

    // With bound == incumbent, the only candidate completion is S plus every
    // remaining live edge, checked in one shot.
    void tie_attempt(const std::vector<int>& live, size_t from) {
        std::vector<Triple> full = edges;
        for (size_t i = from; i < live.size(); ++i) full.push_back(in.cands[live[i]]);
        Hypergraph h = Hypergraph::make(in.n, full);
        if (!is_free(h, in.forbidden)) return;
        if (!eng.feasible(full)) return;
        int value = static_cast<int>(full.size());
        int cur = eng.incumbent_.load(std::memory_order_relaxed);
        if (value < cur) return;
        while (value > cur &&
               !eng.incumbent_.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
        }
        found.push_back({value, std::move(full)});
    }

    void refresh_auts() {
        if (aut_usable && aut_for == edges) return;
        auto res = partial_automorphisms(in.n, edges, in.anchor.size(), 5000);
        auts = std::move(res.perms);
        aut_for = edges;
        aut_usable = true;
        std::uint32_t covered = 0;
        for (std::uint32_t m : emasks) covered |= m;
        isolated_sorted.clear();
        for (int v = 0; v < in.n; ++v)
            if (!(covered & (1u << v))) isolated_sorted.push_back(v);
    }

    // Orbit-minimality filter: skip including c when some automorphism of the
    // current partial graph maps it to a lexicographically smaller candidate.
    // Stateless, so sound under any work-splitting order.
    bool iso_admissible(int ci) {
        if (!in.iso_filter_allowed || in.iso_max_extra <= 0) return true;
        int extra = static_cast<int>(edges.size() - in.anchor.size());
        if (extra >= in.iso_max_extra) return true;
        const Triple& c = in.cands[ci];
        if (edges.empty()) {
            // Every nonempty graph relabels to one containing {0,1,2}.
            if (!in.universe_all) return true;
            return c == Triple{0, 1, 2};
        }
        refresh_auts();
        if (auts.empty()) return true;  // group too large, filter skipped
        for (const std::vector<int>& sigma : auts) {
            int vals[3];
            int k = 0, niso = 0;
            for (int v : c) {
                if (sigma[v] >= 0)
                    vals[k++] = sigma[v];
                else
                    ++niso;
            }
            for (int i = 0; i < niso; ++i) vals[k++] = isolated_sorted[i];
            std::sort(vals, vals + 3);
            Triple img{vals[0], vals[1], vals[2]};
            if (img < c && eng.universe_keys_.count(pack(img))) return false;
        }
        return true;
    }

    void dfs(const std::vector<int>& live, size_t from, int depth) {
        ++nodes;
        int value = static_cast<int>(edges.size());
        int navail = static_cast<int>(live.size() - from);
        int inc = eng.incumbent_.load(std::memory_order_relaxed);
        if (value + navail < inc) return;
        if (navail == 0) return;
        if (value + navail == inc) {
            tie_attempt(live, from);
            return;
        }
        if (frontier && depth >= spill_depth) {
            frontier->push_back({edges, std::vector<int>(live.begin() + from, live.end())});
            return;
        }
        int ci = live[from];
        if (iso_admissible(ci)) {
            push_edge(ci);
            maybe_collect();
            std::uint32_t e_mask = eng.cand_masks_[ci];
            std::vector<int>& next = pool[depth];
            next.clear();
            for (size_t i = from + 1; i < live.size(); ++i)
                if (!conflicts(live[i], e_mask)) next.push_back(live[i]);
            dfs(next, 0, depth + 1);
            pop_edge();
        }
        dfs(live, from + 1, depth + 1);
    }
};

EngineOut Engine::run() {
    EngineOut out;
    Hypergraph root_graph = Hypergraph::make(in_.n, in_.anchor);
    if (!is_free(root_graph, in_.forbidden)) return out;

    // Initial live set: candidates individually compatible with the root.
    std::vector<int> live0;
    for (size_t i = 0; i < in_.cands.size(); ++i) {
        std::vector<Triple> tmp = in_.anchor;
        tmp.push_back(in_.cands[i]);
        if (is_free(Hypergraph::make(in_.n, std::move(tmp)), in_.forbidden))
            live0.push_back(static_cast<int>(i));
    }

    Worker main_worker(*this);
    main_worker.maybe_collect();  // the root itself is a candidate solution

    std::vector<FrontierNode> frontier;
    if (in_.jobs > 1) {
        main_worker.frontier = &frontier;
        main_worker.spill_depth = 14;
    }
    main_worker.dfs(live0, 0, 0);
    out.nodes += main_worker.nodes;

    std::vector<Found> all_found = std::move(main_worker.found);

    if (!frontier.empty()) {
        int workers = std::max(1, in_.jobs);
        std::vector<std::unique_ptr<Worker>> ws;
        std::vector<std::thread> threads;
        for (int i = 0; i < workers; ++i) ws.push_back(std::make_unique<Worker>(*this));
        auto drive = [&](Worker* w) {
            for (;;) {
                size_t idx = frontier_next_.fetch_add(1, std::memory_order_relaxed);
                if (idx >= frontier.size()) break;
                w->reset(frontier[idx].edges);
                w->dfs(frontier[idx].live, 0, 0);
            }
        };
        for (int i = 0; i < workers; ++i) threads.emplace_back(drive, ws[i].get());
        for (auto& t : threads) t.join();
        for (auto& w : ws) {
            out.nodes += w->nodes;
            for (Found& f : w->found) all_found.push_back(std::move(f));
        }
    }

    int best = incumbent_.load();
    if (best < 0) return out;
    out.best = best;
    for (Found& f : all_found)
        if (f.value == best) out.optimal.push_back(std::move(f.edges));
    if (out.optimal.empty())
        throw Error("internal: incumbent " + std::to_string(best) + " has no collected witness");
    return out;
}

bool embeds_into(const Hypergraph& h, const Hypergraph& big) {
    if (h.vertex_count() > big.vertex_count()) return false;
    if (h.edge_count() > big.edge_count()) return false;
    if (h.edge_count() == 0) return true;
    // Full-star host: a graph embeds iff all of its edges share a vertex.
    if (big.edge_count() == binomial(big.vertex_count() - 1, 2)) {
        for (int v = 0; v < big.vertex_count(); ++v)
            if (big.degree(v) == big.edge_count()) return has_universal_vertex(h);
    }
    return find_embedding(big, custom_pattern(h)).has_value();
}

struct FeasibilityCheck {
    const SearchProblem* p;
    bool check_required;

    bool operator()(int n, const std::vector<Triple>& edges) const {
        if (p->connected && !connected_span(n, edges)) return false;
        if (!check_required && !p->exclude_subgraph_of) return true;
        if (check_required || p->exclude_subgraph_of) {
            Hypergraph h = Hypergraph::make(n, edges);
            if (check_required && !contains_some(h, p->required)) return false;
            if (p->exclude_subgraph_of && embeds_into(h, *p->exclude_subgraph_of)) return false;
        }
        return true;
    }
};

bool problem_feasible(const SearchProblem& p, const Hypergraph& h) {
    if (h.vertex_count() != p.n) return false;
    if (!is_free(h, p.forbidden)) return false;
    if (!p.required.empty() && !contains_some(h, p.required)) return false;
    if (p.connected && !h.is_connected()) return false;
    if (p.exclude_subgraph_of && embeds_into(h, *p.exclude_subgraph_of)) return false;
    return true;
}

std::vector<Hypergraph> default_seeds(int n) {
    std::vector<Hypergraph> seeds;
    if (n < 0) return seeds;
    seeds.push_back(complete(n));
    if (n >= 1) seeds.push_back(full_star(n));
    for (int k = 3; k < n; ++k) {
        Hypergraph kk = complete(k);
        std::vector<Triple> e = kk.edges();
        seeds.push_back(Hypergraph::make(n, std::move(e)));
    }
    if (n >= 7) seeds.push_back(disjoint_union(complete(6), complete(n - 6)));
    if (n >= 6) seeds.push_back(hilton_milner(n));
    if (n >= 7) {
        seeds.push_back(h_cp(n));
        seeds.push_back(h_pm(n));
        seeds.push_back(connected_cp_extremal(n));
    }
    for (int m = 3; m <= 5 && m <= n; m += 2) seeds.push_back(cover(n, m));
    return seeds;
}

void validate_problem(const SearchProblem& p) {
    if (p.n < 0) throw Error("search: n must be non-negative");
    if (p.forbidden.empty()) throw Error("search: forbidden family must be nonempty");
    if (p.n > kHardMaxN)
        throw Error("search: n=" + std::to_string(p.n) + " exceeds the hard limit " +
                    std::to_string(kHardMaxN));
    if (p.n > p.max_n)
        throw Error("search: n=" + std::to_string(p.n) + " exceeds max_n=" +
                    std::to_string(p.max_n) + " (raise max_n to allow this)");
    for (const Pattern& r : p.required)
        if (!is_free(r.graph, p.forbidden))
            throw Error("search: vacuous problem, required member " + r.name +
                        " contains a forbidden pattern");
    if (p.anchor) {
        if (p.anchor->vertex_count() > p.n) throw Error("search: anchor does not fit in n vertices");
        if (!is_free(*p.anchor, p.forbidden)) throw Error("search: anchor contains a forbidden pattern");
    }
}

EngineOut run_single(const SearchProblem& p, const std::vector<Triple>& anchor_edges,
                     bool filter_required, int seed_value) {
    EngineIn in;
    in.n = p.n;
    in.anchor = anchor_edges;
    std::unordered_set<int> akeys;
    for (const Triple& t : anchor_edges) akeys.insert(pack(t));
    for (const Triple& t : all_triples(p.n))
        if (!akeys.count(pack(t))) in.cands.push_back(t);
    in.forbidden = p.forbidden;
    bool need_feas = p.connected || filter_required || p.exclude_subgraph_of.has_value();
    if (need_feas) in.feasible = FeasibilityCheck{&p, filter_required};
    in.seed_value = seed_value;
    in.iso_max_extra = p.iso_reject_max_edges;
    in.jobs = p.jobs;
    in.universe_all = anchor_edges.empty();
    Engine eng(in);
    return eng.run();
}

}  // namespace

SearchResult extremal_search(const SearchProblem& p) {
    auto t0 = Clock::now();
    validate_problem(p);

    // Best feasible witness among the stock constructions and caller seeds.
    int seed_value = -1;
    std::vector<Hypergraph> seeds = default_seeds(p.n);
    for (const Hypergraph& h : p.seeds) seeds.push_back(h);
    for (const Hypergraph& h : seeds)
        if (h.vertex_count() == p.n && problem_feasible(p, h))
            seed_value = std::max(seed_value, h.edge_count());

    std::vector<EngineOut> outs;
    if (!p.required.empty() && p.use_anchoring && !p.anchor) {
        // Root the search at a labeled copy of each required member, deduped
        // up to isomorphism; every extremal class contains some member, so it
        // appears in at least one rooted run.
        std::set<CanonicalForm> seen;
        for (const Pattern& r : p.required) {
            if (r.graph.vertex_count() > p.n) continue;
            if (!seen.insert(canonical_form(r.graph)).second) continue;
            SearchProblem sub = p;
            sub.required.clear();
            outs.push_back(run_single(sub, r.graph.edges(), false, seed_value));
        }
    } else {
        std::vector<Triple> anchor_edges = p.anchor ? p.anchor->edges() : std::vector<Triple>{};
        outs.push_back(run_single(p, anchor_edges, !p.required.empty(), seed_value));
    }

    SearchResult result;
    int best = -1;
    for (const EngineOut& o : outs) {
        result.nodes_explored += o.nodes;
        best = std::max(best, o.best);
    }
    if (best >= 0) {
        result.max_edges = best;
        std::set<CanonicalForm> forms;
        for (const EngineOut& o : outs)
            if (o.best == best)
                for (const auto& edges : o.optimal)
                    forms.insert(canonical_form(Hypergraph::make(p.n, edges)));
        result.extremal.assign(forms.begin(), forms.end());
    }
    result.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return result;
}

bool certify(const SearchResult& r, const SearchProblem& p) {
    if (!r.max_edges) return r.extremal.empty();
    if (r.extremal.empty()) return false;
    for (size_t i = 0; i + 1 < r.extremal.size(); ++i)
        if (!(r.extremal[i] < r.extremal[i + 1])) return false;
    for (const CanonicalForm& cf : r.extremal) {
        if (cf.n != p.n) return false;
        Hypergraph h;
        try {
            h = cf.to_hypergraph();
        } catch (const Error&) {
            return false;
        }
        if (h.edge_count() != *r.max_edges) return false;
        if (!problem_feasible(p, h)) return false;
    }
    return true;
}

std::string problem_fingerprint(int n, const std::vector<Pattern>& forbidden,
                                const std::vector<Pattern>& required, bool connected,
                                bool second_order) {
    auto names = [](const std::vector<Pattern>& ps) {
        std::vector<std::string> v;
        for (const Pattern& p : ps) v.push_back(p.name);
        std::sort(v.begin(), v.end());
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            out += v[i];
        }
        return out;
    };
    std::ostringstream s;
    s << "v=" << kEngineVersion << ";n=" << n << ";forbid=" << names(forbidden)
      << ";require=" << names(required) << ";connected=" << (connected ? 1 : 0)
      << ";second=" << (second_order ? 1 : 0);
    return s.str();
}

namespace {

bool memoizable(const std::vector<Pattern>& ps) {
    for (const Pattern& p : ps)
        if (p.kind == Pattern::Kind::Custom) return false;
    return true;
}

SearchResult run_memoized(SearchProblem p, const std::string& fp, const SearchOptions& opts) {
    if (opts.memo && !fp.empty()) {
        if (auto hit = opts.memo->lookup(fp)) return *hit;
    }
    SearchResult r = extremal_search(p);
    if (opts.memo && !fp.empty()) opts.memo->record(fp, p, r);
    return r;
}

}  // namespace

SearchResult turan(int n, const std::vector<Pattern>& forbidden, const SearchOptions& opts) {
    SearchProblem p;
    p.n = n;
    p.forbidden = forbidden;
    p.jobs = opts.jobs;
    p.max_n = opts.max_n;
    std::string fp =
        memoizable(forbidden) ? problem_fingerprint(n, forbidden, {}, false, false) : "";
    return run_memoized(std::move(p), fp, opts);
}

SearchResult conditional_turan(int n, const std::vector<Pattern>& forbidden,
                               const std::vector<Pattern>& required, bool connected,
                               const SearchOptions& opts) {
    if (required.empty()) throw Error("conditional search: required family must be nonempty");
    SearchProblem p;
    p.n = n;
    p.forbidden = forbidden;
    p.required = required;
    p.connected = connected;
    p.jobs = opts.jobs;
    p.max_n = opts.max_n;
    std::string fp = memoizable(forbidden) && memoizable(required)
                         ? problem_fingerprint(n, forbidden, required, connected, false)
                         : "";
    return run_memoized(std::move(p), fp, opts);
}

SearchResult second_order(int n, const std::vector<Pattern>& forbidden,
                          const SearchOptions& opts) {
    SearchResult base = turan(n, forbidden, opts);
    if (!base.max_edges || base.extremal.size() != 1)
        throw Error("second-order search: extremal family is not a singleton (" +
                    std::to_string(base.extremal.size()) + " classes)");
    Hypergraph hext = base.extremal[0].to_hypergraph();
    if (hext.edge_count() == binomial(n, 3))
        throw Error("second-order search: the extremal graph is complete and contains every "
                    "n-vertex graph");
    SearchProblem p;
    p.n = n;
    p.forbidden = forbidden;
    p.exclude_subgraph_of = hext;
    p.jobs = opts.jobs;
    p.max_n = opts.max_n;
    std::string fp =
        memoizable(forbidden) ? problem_fingerprint(n, forbidden, {}, false, true) : "";
    return run_memoized(std::move(p), fp, opts);
}

RestrictedResult restricted_search(const RestrictedProblem& p) {
    if (p.forbidden.empty()) throw Error("search: forbidden family must be nonempty");
    if (p.n > kHardMaxN) throw Error("search: n exceeds the hard limit");
    EngineIn in;
    in.n = p.n;
    in.anchor = p.base;
    in.cands = p.candidates;
    std::sort(in.cands.begin(), in.cands.end());
    in.forbidden = p.forbidden;
    in.feasible = p.feasible;
    in.iso_max_extra = p.iso_reject_max_edges;
    in.jobs = p.jobs;
    in.universe_all = false;
    in.iso_filter_allowed = p.candidates_isolated_symmetric;
    Engine eng(in);
    EngineOut out = eng.run();
    RestrictedResult r;
    r.nodes = out.nodes;
    if (out.best >= 0) {
        r.max_edges = out.best;
        r.optimal = std::move(out.optimal);
    }
    return r;
}

}  // namespace turan3
