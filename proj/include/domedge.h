/*
 * domedge — exact computation of the dominated edge chromatic number.
 *
 * C interface to the shared library. Graphs are opaque handles; every
 * function returns a domedge_status and reports detail through out
 * parameters. Strings returned through char** are heap-allocated and must
 * be released with domedge_string_free. On any failure the thread-local
 * message from domedge_last_error() describes what went wrong.
 */

#ifndef DOMEDGE_H
#define DOMEDGE_H

#include <stddef.h>

#if defined(_WIN32)
#define DOMEDGE_API __declspec(dllexport)
#else
#define DOMEDGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct domedge_graph domedge_graph;

typedef enum domedge_status {
    DOMEDGE_OK = 0,
    DOMEDGE_ERR_INVALID_ARGUMENT = 1, /* bad parameter, index, or graph data */
    DOMEDGE_ERR_PARSE = 2,            /* malformed graph/coloring text */
    DOMEDGE_ERR_IO = 3,               /* file not readable/writable */
    DOMEDGE_ERR_LIMIT = 4,            /* solver/oracle capacity exceeded */
    DOMEDGE_ERR_INTERNAL = 5
} domedge_status;

typedef struct domedge_budget {
    long long node_cap;   /* <= 0 means the default (10^7 nodes) */
    double time_limit_s;  /* <= 0 means the default (60 s) */
} domedge_budget;

typedef struct domedge_solve_summary {
    int chi_dom_prime; /* best value found; the optimum iff exact != 0 */
    int exact;         /* 1 when the search completed, 0 on budget cutoff */
    int lower_bound;   /* best proven lower bound */
    long long nodes;   /* branch-and-bound nodes explored */
} domedge_solve_summary;

DOMEDGE_API const char* domedge_version(void);

/* Message for the most recent failure on this thread ("" if none). */
DOMEDGE_API const char* domedge_last_error(void);

DOMEDGE_API void domedge_string_free(char* s);
DOMEDGE_API void domedge_ints_free(int* p);
DOMEDGE_API void domedge_graph_free(domedge_graph* g);

/* ---- graph construction and inspection ---------------------------------- */

/* endpoints holds m pairs flattened as u0,v0,u1,v1,... (0-based). */
DOMEDGE_API domedge_status domedge_graph_build(int n, const int* endpoints,
                                               size_t m, domedge_graph** out);
DOMEDGE_API domedge_status domedge_graph_parse(const char* text, domedge_graph** out);
DOMEDGE_API domedge_status domedge_graph_read_file(const char* path, domedge_graph** out);
DOMEDGE_API domedge_status domedge_graph_write_file(const domedge_graph* g, const char* path);
DOMEDGE_API domedge_status domedge_graph_format(const domedge_graph* g, char** out_text);

DOMEDGE_API int domedge_graph_order(const domedge_graph* g); /* n, -1 on null */
DOMEDGE_API int domedge_graph_size(const domedge_graph* g);  /* m, -1 on null */
/* Fills 2m ints in canonical edge order. */
DOMEDGE_API domedge_status domedge_graph_edges(const domedge_graph* g, int* endpoints);

/* ---- generators and operators ------------------------------------------- */

/* family: path, cycle, complete, complete_bipartite, star, bistar, wheel,
 * friendship, realization_a, realization_b. params as in the CLI. */
DOMEDGE_API domedge_status domedge_generate(const char* family, const int* params,
                                            size_t nparams, domedge_graph** out);
DOMEDGE_API domedge_status domedge_join(const domedge_graph* g, const domedge_graph* h,
                                        domedge_graph** out);
DOMEDGE_API domedge_status domedge_corona(const domedge_graph* g, const domedge_graph* h,
                                          domedge_graph** out);
DOMEDGE_API domedge_status domedge_subdivide(const domedge_graph* g, int k,
                                             domedge_graph** out);
DOMEDGE_API domedge_status domedge_remove_vertex(const domedge_graph* g, int v,
                                                 domedge_graph** out);
DOMEDGE_API domedge_status domedge_remove_edge(const domedge_graph* g, int e,
                                               domedge_graph** out);
DOMEDGE_API domedge_status domedge_contract_edge(const domedge_graph* g, int e,
                                                 domedge_graph** out);

/* ---- solving and validation --------------------------------------------- */

/* Exact solve. budget may be NULL for defaults; summary and json_report may
 * each be NULL when not wanted. The JSON report carries n, m, chi_dom_prime,
 * status, coloring, certificate, bounds, gamma_prime, gamma_t_prime, stats. */
DOMEDGE_API domedge_status domedge_solve(const domedge_graph* g,
                                         const domedge_budget* budget,
                                         int induced_path_cap,
                                         domedge_solve_summary* summary,
                                         char** json_report);

/* Brute-force oracle; fails with DOMEDGE_ERR_LIMIT when m > edge_cap. */
DOMEDGE_API domedge_status domedge_oracle_chi(const domedge_graph* g, int edge_cap,
                                              int* value);

/* gamma_t_prime is set to -1 when total edge domination is infeasible
 * (the graph has an edge with no adjacent edge). */
DOMEDGE_API domedge_status domedge_gamma_numbers(const domedge_graph* g,
                                                 int* gamma_prime, int* gamma_t_prime);

DOMEDGE_API domedge_status domedge_validate_coloring(const domedge_graph* g,
                                                     const int* colors, size_t m,
                                                     int* proper, int* dominated,
                                                     char** json_report);

/* Parses a "colors c_0 ... c_{m-1}" file body; *was_normalized reports
 * whether non-contiguous ids were renumbered. */
DOMEDGE_API domedge_status domedge_coloring_parse(const char* text, int** colors_out,
                                                  size_t* m_out, int* was_normalized);

/* ---- formulas, theorem checks, sweep ------------------------------------- */

/* *applicable/*value mirror the JSON; *value is -1 when not applicable. */
DOMEDGE_API domedge_status domedge_formula(const char* family, const int* params,
                                           size_t nparams, int* applicable,
                                           int* value, char** json_report);

DOMEDGE_API domedge_status domedge_check_graph(const char* theorem_id,
                                               const domedge_graph* g,
                                               const domedge_budget* budget,
                                               char** json_report);
DOMEDGE_API domedge_status domedge_check_graph_index(const char* theorem_id,
                                                     const domedge_graph* g, int index,
                                                     const domedge_budget* budget,
                                                     char** json_report);
DOMEDGE_API domedge_status domedge_check_pair(const char* theorem_id,
                                              const domedge_graph* g,
                                              const domedge_graph* h,
                                              const domedge_budget* budget,
                                              char** json_report);
DOMEDGE_API domedge_status domedge_check_subdivision(const char* theorem_id,
                                                     const domedge_graph* g, int k,
                                                     const domedge_budget* budget,
                                                     char** json_report);
DOMEDGE_API domedge_status domedge_check_params(const char* theorem_id, int a, int b,
                                                const domedge_budget* budget,
                                                char** json_report);

/* spec_json may be NULL or "" for the default sweep. The report carries
 * {"summary": ..., "reports": [...], "findings": [...]}. */
DOMEDGE_API domedge_status domedge_sweep(const char* spec_json,
                                         const domedge_budget* budget,
                                         char** json_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DOMEDGE_H */
