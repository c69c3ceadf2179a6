/*
 * somborq - Sombor index toolkit for quasi-tree graphs.
 *
 * C API of the shared library. Graphs are opaque handles; every fallible
 * call returns an sq_status and reports the failure text via sq_last_error()
 * (thread local). Strings returned through char** are heap allocated and
 * must be released with sq_free().
 */
#ifndef SOMBORQ_H
#define SOMBORQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define SQ_API __declspec(dllexport)
#else
#define SQ_API __attribute__((visibility("default")))
#endif

typedef enum sq_status {
  SQ_OK = 0,
  SQ_ERR_ARGUMENT = 1,    /* precondition violated; message names the bound */
  SQ_ERR_PARSE = 2,       /* edge-list text rejected; message has the line  */
  SQ_ERR_UNSUPPORTED = 3, /* beyond a documented size cap                   */
  SQ_ERR_IO = 4,          /* file could not be read or written              */
  SQ_ERR_INTERNAL = 5
} sq_status;

typedef struct sq_graph sq_graph;

SQ_API const char* sq_version(void);
SQ_API const char* sq_status_name(sq_status s);
SQ_API const char* sq_last_error(void);
SQ_API void sq_free(char* p);

/* ---- graphs ------------------------------------------------------------ */

SQ_API sq_status sq_graph_create(int n, sq_graph** out);
SQ_API sq_status sq_graph_clone(const sq_graph* g, sq_graph** out);
SQ_API void sq_graph_free(sq_graph* g);

SQ_API int sq_graph_order(const sq_graph* g); /* -1 on null */
SQ_API int sq_graph_size(const sq_graph* g);  /* -1 on null */
SQ_API sq_status sq_graph_degree(const sq_graph* g, int v, int* degree);
SQ_API sq_status sq_graph_has_edge(const sq_graph* g, int u, int v, int* present);
SQ_API sq_status sq_graph_add_edge(sq_graph* g, int u, int v);
SQ_API sq_status sq_graph_delete_edge(sq_graph* g, int u, int v);
SQ_API sq_status sq_graph_delete_vertex(sq_graph* g, int v);

SQ_API sq_status sq_graph_is_tree(const sq_graph* g, int* out);

/* Fills up to cap witnesses (apex vertex and its degree); *count receives
 * the true number. cap >= order always suffices. */
SQ_API sq_status sq_graph_witnesses(const sq_graph* g, int* apexes, int* degrees, int cap,
                                    int* count);

/* Relabelling-invariant encoding, equal iff isomorphic; n <= 16. */
SQ_API sq_status sq_graph_canonical(const sq_graph* g, unsigned char* buf, size_t cap,
                                    size_t* len);

/* Edge-list text format: "n m" header then m lines "u v" (0 <= u < v < n),
 * '#' comment lines allowed. */
SQ_API sq_status sq_graph_parse(const char* text, sq_graph** out);
SQ_API sq_status sq_graph_read(const char* path, sq_graph** out);
SQ_API sq_status sq_graph_format(const sq_graph* g, char** text);
SQ_API sq_status sq_graph_write(const sq_graph* g, const char* path);

/* ---- Sombor index ------------------------------------------------------ */

SQ_API sq_status sq_sombor(const sq_graph* g, double* value);

/* JSON array of [a, b, count]: `count` edges whose endpoint degrees are
 * (a, b) with a <= b. */
SQ_API sq_status sq_sombor_terms(const sq_graph* g, char** json);

/* Two-tier comparison of SO(a) vs SO(b): ordering is -1/0/+1, escalated is 1
 * when extended precision decided. */
SQ_API sq_status sq_sombor_compare(const sq_graph* a, const sq_graph* b, int* ordering,
                                   double* gap, int* escalated);

/* ---- named families and closed forms ------------------------------------ */

/* family: S | Sprime | Sdprime | Q | Qstar | Qprime | Qdprime (k ignored for
 * the S families). Returns the graph plus its witness. */
SQ_API sq_status sq_gen_family(const char* family, int n, int k, sq_graph** out, int* apex,
                               int* apex_degree);

/* name: phi | phi_prime | phi_star | phi_dprime | f */
SQ_API sq_status sq_formula(const char* name, int n, int k, double* value);

/* JSON array of [coeff, radicand]: the value is sum coeff * sqrt(radicand). */
SQ_API sq_status sq_formula_terms(const char* name, int n, int k, char** json);

/* ---- exhaustive ranking and claim verification -------------------------- */

/* Rank Q(n,k) by SO (n <= 10). JSON document with one entry per retained
 * level: value, value_str, radicals (the normalised term multiset),
 * labeled_count, hits and representatives (edge lists, automorphism counts,
 * family annotation when the class is a named construction). jobs <= 0 picks
 * hardware concurrency. */
SQ_API sq_status sq_rank(int n, int k, int top, int jobs, char** json);

/* Run one claim ("thm3.1", "prop3.1", ...) or "all" for the battery.
 * options_json may be NULL or configure {"n_lo", "n_hi", "nmax", "nmax2",
 * "samples", "seed", "jobs"}. *passed is 1 when every non-advisory check
 * passed; *report_json receives a report document. */
SQ_API sq_status sq_verify(const char* claim, const char* options_json, int* passed,
                           char** report_json);

/* Newline-separated "id: description" list of the accepted claim ids. */
SQ_API sq_status sq_claims(char** text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SOMBORQ_H */
