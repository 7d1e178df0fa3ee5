/* qtharm — exact harmonic-index / diameter toolkit for small graphs.
 *
 * C interface to the shared library. Objects are opaque handles created and
 * destroyed here; every function returns QTH_OK (0) or a negative status
 * code, with a thread-local message available from qth_last_error().
 * Strings handed out through char** are owned by the caller and must be
 * released with qth_string_free().
 */
#ifndef QTHARM_H
#define QTHARM_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
    QTH_OK = 0,
    QTH_ERR_INPUT = -1,       /* bad argument */
    QTH_ERR_DOMAIN = -2,      /* value undefined for this input */
    QTH_ERR_CAPACITY = -3,    /* documented size cap exceeded */
    QTH_ERR_PARSE = -4,       /* malformed serialized input */
    QTH_ERR_UNSUPPORTED = -5, /* feature not provided for this argument */
    QTH_ERR_INTERNAL = -6
};

typedef struct qth_graph qth_graph;
typedef struct qth_report qth_report;
typedef struct qth_lemma_result qth_lemma_result;

const char* qth_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* qth_last_error(void);

void qth_string_free(char* s);

/* ------------------------------------------------------------------ */
/* graph construction and queries                                      */

int qth_graph_from_graph6(const char* line, qth_graph** out);
int qth_graph_from_edge_list(const char* text, qth_graph** out);
/* spec syntax: U(n), V(r,s), P(n), C(n), K(n), S(n), U641, U531, K4-  */
int qth_graph_from_family(const char* spec, qth_graph** out);
void qth_graph_free(qth_graph* g);

int qth_graph_order(const qth_graph* g);
int qth_graph_edge_count(const qth_graph* g);
int qth_graph_degree(const qth_graph* g, int v);
int qth_graph_min_degree(const qth_graph* g);
int qth_graph_is_connected(const qth_graph* g); /* 1 / 0 / negative error */
int qth_graph_is_tree(const qth_graph* g);
int qth_graph_is_quasi_tree(const qth_graph* g);
int qth_graph_diameter(const qth_graph* g); /* >= 0, or negative error */

/* Fills buf (capacity cap) with the vertices whose deletion leaves a tree;
 * returns the full witness count, which may exceed cap. */
int qth_graph_quasi_tree_witnesses(const qth_graph* g, int* buf, int cap);

int qth_graph_harmonic_index(const qth_graph* g, char** out_pq);
int qth_graph_to_graph6(const qth_graph* g, char** out);
int qth_graph_to_edge_list(const qth_graph* g, char** out);

/* Family spec string if g is isomorphic to a named family, else "". */
int qth_graph_recognize(const qth_graph* g, char** out_spec);

/* ------------------------------------------------------------------ */
/* exact bound catalog                                                 */

/* bound ids: qt_additive, qt_multiplicative, conj1_additive,
 * conj1_multiplicative, tree_additive, tree_multiplicative,
 * upper_additive, upper_multiplicative                                 */
int qth_bound_value(const char* bound_id, int n, int diameter, char** out_pq);

/* JSON verdict of the comma-separated bounds against graph g. */
int qth_graph_evaluate(const qth_graph* g, const char* bounds_csv, char** out_json);

/* Closed-form H ("p/q") and diameter for a family spec, when available. */
int qth_family_closed_form(const char* spec, char** out_h_pq, long* out_diameter);

/* Rounded decimal rendering of an exact "p/q" value. */
int qth_rational_decimal(const char* pq, unsigned digits, char** out);

/* ------------------------------------------------------------------ */
/* enumeration                                                         */

/* classes: connected, tree, unicyclic, quasi-tree */
typedef int (*qth_graph6_sink)(const char* graph6_line, void* user); /* nonzero stops */
int qth_enumerate(int n, const char* graph_class, int jobs, qth_graph6_sink sink, void* user);

/* Cross-validation generator: quasi-trees built from trees one order down. */
int qth_enumerate_quasi_trees_via_trees(int n, int jobs, qth_graph6_sink sink, void* user);

/* ------------------------------------------------------------------ */
/* verification sweeps                                                 */

/* Quasi-tree sweep of both qt bounds with the built-in expectation for
 * exceptional and equality graphs (see qth_report_contract_ok). */
int qth_verify_theorems(int n_min, int n_max, int jobs, qth_report** out);

/* All-connected-graph sweep of the conj1 bounds; report only. */
int qth_verify_conjecture1(int n_min, int n_max, int jobs, qth_report** out);

/* Generic sweep: class as above, bounds comma-separated. Report only. */
int qth_verify_sweep(const char* graph_class, const char* bounds_csv, int n_min, int n_max,
                     int jobs, qth_report** out);

/* 1 when checked and matched, 0 when checked and broken, -1 when the
 * sweep carries no built-in expectation. */
int qth_report_contract_ok(const qth_report* r);

/* formats: text, json, csv. with_timings = 0 gives reproducible bytes. */
int qth_report_render(const qth_report* r, const char* format, int with_timings, char** out);
void qth_report_free(qth_report* r);

/* ------------------------------------------------------------------ */
/* lemma grids                                                         */

/* f(x,y) = (x+4)/(x(x+1)(x+2)) + (y+4)/(y(y+1)(y+2)) - 2/((x+y)(x+y-2))
 * checked > 0 on [2,x_max] x [2,y_max]; denominator_cap > 1 refines the
 * integer grid with rational sample points p/q, q <= cap. */
int qth_check_lemma_f(long x_max, long y_max, int denominator_cap, qth_lemma_result** out);

/* chain x/(x+2) >= 1/(5+x) + (x-1)/(2+x) >= 11/28 on [2, x_max], plus
 * monotonicity of the middle term. */
int qth_check_lemma_g(long x_max, int denominator_cap, qth_lemma_result** out);

int qth_lemma_result_ok(const qth_lemma_result* r);
int qth_lemma_result_min(const qth_lemma_result* r, char** out_pq);
int qth_lemma_result_render(const qth_lemma_result* r, const char* format, char** out);
void qth_lemma_result_free(qth_lemma_result* r);

#ifdef __cplusplus
}
#endif

#endif /* QTHARM_H */
