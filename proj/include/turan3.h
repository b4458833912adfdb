/* C interface to the turan3 engine: 3-uniform hypergraph construction,
 * isomorphism, pattern containment, exact extremal search, and the
 * configuration-fact verifiers. Objects are opaque handles; every function
 * that can fail returns a t3_status, with a thread-local message available
 * from t3_last_error(). Strings returned through char** are heap-allocated
 * and must be released with t3_string_free(). */
#ifndef TURAN3_H
#define TURAN3_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct t3_graph t3_graph;

typedef enum t3_status {
    T3_OK = 0,
    T3_ERR_INVALID_ARGUMENT = 1,
    T3_ERR_PARSE = 2,
    T3_ERR_LIMIT = 3,
    T3_ERR_IO = 4,
    T3_ERR_INTERNAL = 5
} t3_status;

const char* t3_version(void);
const char* t3_last_error(void);

/* triples: 3*triple_count ints, each consecutive block one edge */
t3_status t3_graph_make(int n, const int* triples, size_t triple_count, t3_graph** out);
t3_status t3_graph_decode(const char* text, t3_graph** out);
t3_status t3_graph_encode(const t3_graph* g, char** out_text);
int t3_graph_vertex_count(const t3_graph* g);
int t3_graph_edge_count(const t3_graph* g);
t3_status t3_graph_degree(const t3_graph* g, int vertex, int* out_degree);
int t3_graph_is_connected(const t3_graph* g); /* 1 or 0 */
t3_status t3_graph_disjoint_union(const t3_graph* a, const t3_graph* b, t3_graph** out);
t3_status t3_graph_induced(const t3_graph* g, const int* vertices, size_t count, t3_graph** out);
t3_status t3_graph_canonical(const t3_graph* g, t3_graph** out);
int t3_graph_isomorphic(const t3_graph* a, const t3_graph* b); /* 1, 0, or -1 on error */
t3_status t3_graph_automorphisms(const t3_graph* g, uint64_t* out_count);
void t3_graph_free(t3_graph* g);

/* kind: complete | full_star | cover | h_cp | h_pm | hilton_milner |
 * connected_cp_extremal; m is only read for cover */
t3_status t3_construct(const char* kind, int n, int m, t3_graph** out);

/* pattern ids: P3_3, C3_3, F5, K4_3, M2, M4, ..., 2P3_3, ... */
t3_status t3_pattern(const char* id, t3_graph** out);

/* patterns_csv: comma-separated pattern ids. On return *out_witness_json is
 * NULL when the host avoids every pattern, else a JSON object
 * {"pattern": id, "map": [host vertices indexed by pattern vertex]}. */
t3_status t3_check_free(const t3_graph* host, const char* patterns_csv, char** out_witness_json);

/* problem_json: {"n": int, "forbid": [ids], "require": [ids],
 * "connected": bool, "second_order": bool, "jobs": int, "max_n": int,
 * "cache": bool, "cache_path": str}. Result JSON: {"problem": {...},
 * "max_edges": int|null, "extremal": [{"n": int, "edges": [[a,b,c],...]}],
 * "nodes_explored": int, "elapsed_ms": int, "engine_version": str}. */
t3_status t3_search_run(const char* problem_json, char** out_result_json);

/* checks: all | cross | pusto | disjoint | exclusions | konig | lemmas |
 * identities; s <= 0 picks each check's default frame size. Returns a JSON
 * array of {check, instances, passed, failed: [...]} reports. */
t3_status t3_verify_run(const char* checks, int s, char** out_report_json);

/* theorem: main | cycle | second | connected | hm | conjectures. Returns
 * {"title", "columns", "rows", "text"}. cache_path NULL or empty uses the
 * default store. */
t3_status t3_report_run(const char* theorem, int max_n, const char* cache_path, int jobs,
                        char** out_json);

void t3_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TURAN3_H */
