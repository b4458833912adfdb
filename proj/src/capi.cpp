#include "turan3.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "turan3/constructions.hpp"
#include "turan3/hypergraph.hpp"
#include "turan3/iso.hpp"
#include "turan3/patterns.hpp"
#include "turan3/report.hpp"
#include "turan3/search.hpp"
#include "turan3/store.hpp"

using namespace turan3;

struct t3_graph {
    Hypergraph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

t3_status fail(t3_status code, const std::string& what) {
    g_last_error = what;
    return code;
}

t3_status classify(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return fail(T3_ERR_PARSE, e.what());
    if (dynamic_cast<const Error*>(&e)) {
        std::string w = e.what();
        if (w.find("hard limit") != std::string::npos || w.find("max_n") != std::string::npos)
            return fail(T3_ERR_LIMIT, w);
        if (w.find("store") != std::string::npos) return fail(T3_ERR_IO, w);
        return fail(T3_ERR_INVALID_ARGUMENT, w);
    }
    return fail(T3_ERR_INTERNAL, e.what());
}

template <typename F>
t3_status guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return classify(e);
    } catch (...) {
        return fail(T3_ERR_INTERNAL, "unknown error");
    }
}

}  // namespace

extern "C" {

const char* t3_version(void) { return kEngineVersion; }

const char* t3_last_error(void) { return g_last_error.c_str(); }

t3_status t3_graph_make(int n, const int* triples, size_t triple_count, t3_graph** out) {
    if (!out || (triple_count > 0 && !triples))
        return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<Triple> edges;
        edges.reserve(triple_count);
        for (size_t i = 0; i < triple_count; ++i)
            edges.push_back({triples[3 * i], triples[3 * i + 1], triples[3 * i + 2]});
        *out = new t3_graph{Hypergraph::make(n, std::move(edges))};
        return T3_OK;
    });
}

t3_status t3_graph_decode(const char* text, t3_graph** out) {
    if (!text || !out) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new t3_graph{decode(text)};
        return T3_OK;
    });
}

t3_status t3_graph_encode(const t3_graph* g, char** out_text) {
    if (!g || !out_text) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_text = dup_string(encode(g->g));
        return *out_text ? T3_OK : fail(T3_ERR_INTERNAL, "allocation failed");
    });
}

int t3_graph_vertex_count(const t3_graph* g) { return g ? g->g.vertex_count() : -1; }

int t3_graph_edge_count(const t3_graph* g) { return g ? g->g.edge_count() : -1; }

t3_status t3_graph_degree(const t3_graph* g, int vertex, int* out_degree) {
    if (!g || !out_degree) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_degree = g->g.degree(vertex);
        return T3_OK;
    });
}

int t3_graph_is_connected(const t3_graph* g) { return g && g->g.is_connected() ? 1 : 0; }

t3_status t3_graph_disjoint_union(const t3_graph* a, const t3_graph* b, t3_graph** out) {
    if (!a || !b || !out) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new t3_graph{disjoint_union(a->g, b->g)};
        return T3_OK;
    });
}

t3_status t3_graph_induced(const t3_graph* g, const int* vertices, size_t count, t3_graph** out) {
    if (!g || !out || (count > 0 && !vertices))
        return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new t3_graph{
            g->g.induced(VertexSet::of(std::vector<int>(vertices, vertices + count)))};
        return T3_OK;
    });
}

t3_status t3_graph_canonical(const t3_graph* g, t3_graph** out) {
    if (!g || !out) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new t3_graph{canonical_form(g->g).to_hypergraph()};
        return T3_OK;
    });
}

int t3_graph_isomorphic(const t3_graph* a, const t3_graph* b) {
    if (!a || !b) return -1;
    try {
        return are_isomorphic(a->g, b->g) ? 1 : 0;
    } catch (...) {
        return -1;
    }
}

t3_status t3_graph_automorphisms(const t3_graph* g, uint64_t* out_count) {
    if (!g || !out_count) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_count = automorphism_count(g->g);
        return T3_OK;
    });
}

void t3_graph_free(t3_graph* g) { delete g; }

t3_status t3_construct(const char* kind, int n, int m, t3_graph** out) {
    if (!kind || !out) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::string k = kind;
        Hypergraph h;
        if (k == "complete")
            h = complete(n);
        else if (k == "full_star")
            h = full_star(n);
        else if (k == "cover")
            h = cover(n, m);
        else if (k == "h_cp")
            h = h_cp(n);
        else if (k == "h_pm")
            h = h_pm(n);
        else if (k == "hilton_milner")
            h = hilton_milner(n);
        else if (k == "connected_cp_extremal")
            h = connected_cp_extremal(n);
        else
            throw Error("unknown construction \"" + k + "\"");
        *out = new t3_graph{std::move(h)};
        return T3_OK;
    });
}

t3_status t3_pattern(const char* id, t3_graph** out) {
    if (!id || !out) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new t3_graph{build_pattern(id).graph};
        return T3_OK;
    });
}

t3_status t3_check_free(const t3_graph* host, const char* patterns_csv, char** out_witness_json) {
    if (!host || !patterns_csv || !out_witness_json)
        return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_witness_json = nullptr;
        std::string csv = patterns_csv;
        size_t pos = 0;
        while (pos <= csv.size()) {
            size_t comma = csv.find(',', pos);
            std::string id =
                csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!id.empty()) {
                Pattern p = build_pattern(id);
                if (auto emb = find_embedding(host->g, p)) {
                    nlohmann::json j;
                    j["pattern"] = id;
                    j["map"] = emb->map;
                    *out_witness_json = dup_string(j.dump());
                    return T3_OK;
                }
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return T3_OK;
    });
}

t3_status t3_search_run(const char* problem_json, char** out_result_json) {
    if (!problem_json || !out_result_json)
        return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_result_json = dup_string(run_search_json(problem_json));
        return *out_result_json ? T3_OK : fail(T3_ERR_INTERNAL, "allocation failed");
    });
}

t3_status t3_verify_run(const char* checks, int s, char** out_report_json) {
    if (!checks || !out_report_json) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_report_json = dup_string(run_verify_json(checks, s));
        return *out_report_json ? T3_OK : fail(T3_ERR_INTERNAL, "allocation failed");
    });
}

t3_status t3_report_run(const char* theorem, int max_n, const char* cache_path, int jobs,
                        char** out_json) {
    if (!theorem || !out_json) return fail(T3_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::filesystem::path path = (cache_path && *cache_path)
                                         ? std::filesystem::path(cache_path)
                                         : ResultsStore::default_path();
        ResultsStore store(path);
        ReportTable t = report_theorem(theorem, max_n, store, jobs);
        *out_json = dup_string(t.to_json());
        return *out_json ? T3_OK : fail(T3_ERR_INTERNAL, "allocation failed");
    });
}

void t3_string_free(char* s) { std::free(s); }

}  // extern "C"
