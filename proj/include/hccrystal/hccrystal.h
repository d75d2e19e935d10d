/* Copyright 2026 The hccrystal Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the hccrystal library: partition/abacus combinatorics,
 * rank-layered colored crystal graphs, and the weak-series predictor.
 *
 * Conventions:
 *   - Partitions are text in the grammar "15,14,13,10^3,1" ("-" is empty;
 *     compact digit runs like "321^2" are also accepted on input).
 *   - Bipartitions are "<first>.<second>", e.g. "5^3,4^2.6" or "-.1^2".
 *   - Every fallible call returns an hcc_status; on failure, a thread-local
 *     message is available from hcc_last_error().
 *   - Strings returned through char** are heap-allocated; release them with
 *     hcc_string_free().
 */

#ifndef HCCRYSTAL_HCCRYSTAL_H_
#define HCCRYSTAL_HCCRYSTAL_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcc_status {
  HCC_OK = 0,
  HCC_ERROR_NULL = 1,    /* a required pointer argument was NULL */
  HCC_ERROR_PARSE = 2,   /* malformed partition/bipartition/list text */
  HCC_ERROR_INVALID = 3, /* parameter outside the documented domain */
  HCC_ERROR_DOMAIN = 4,  /* structurally valid input violating a precondition */
  HCC_ERROR_LIMIT = 5,   /* resource guard exceeded */
} hcc_status;

typedef enum hcc_format {
  HCC_FORMAT_TEXT = 0,
  HCC_FORMAT_DOT = 1,
  HCC_FORMAT_JSON = 2,
} hcc_format;

/* Opaque handles. */
typedef struct hcc_graph hcc_graph;
typedef struct hcc_prediction hcc_prediction;

/* Message for the calling thread's most recent failure; never NULL. Valid
 * until the next failing call on the same thread. */
const char* hcc_last_error(void);

/* Releases a string obtained through any char** out-parameter below. */
void hcc_string_free(char* s);

/* --- crystal graphs -------------------------------------------------------
 *
 * Both builders take a vertex budget (max_vertices <= 0 selects the default
 * of 1000000) and a worker count (workers <= 0 means 1); rendered output is
 * byte-identical for every worker count.
 */

/* The full graph: every bipartition of rank <= max_rank at the given charge,
 * with all colored edges between consecutive ranks. */
hcc_status hcc_graph_build(int e, int charge1, int charge2, int max_rank,
                           long long max_vertices, int workers,
                           hcc_graph** out);

/* The vertices reachable from `root_bipartition` (which must be a
 * highest-weight vertex) in at most `depth` moves. */
hcc_status hcc_graph_component(int e, int charge1, int charge2,
                               const char* root_bipartition, int depth,
                               long long max_vertices, int workers,
                               hcc_graph** out);

void hcc_graph_free(hcc_graph* g);

hcc_status hcc_graph_counts(const hcc_graph* g, long long* vertices,
                            long long* edges);

hcc_status hcc_graph_render(const hcc_graph* g, hcc_format format, char** out);

/* The color rotation d (0 <= d < e) under which `a` is isomorphic to `b` as
 * a rooted colored graph; HCC_ERROR_DOMAIN when no rotation works. */
hcc_status hcc_graph_color_shift(const hcc_graph* a, const hcc_graph* b,
                                 int* shift);

/* --- weak-series prediction ----------------------------------------------- */

/* Groups all degree-n labels into predicted weak series (e odd). */
hcc_status hcc_predict(int n, int e, hcc_prediction** out);

void hcc_prediction_free(hcc_prediction* p);

hcc_status hcc_prediction_render(const hcc_prediction* p, hcc_format format,
                                 char** out);

/* --- single-object reports ------------------------------------------------ */

/* Two-row bead picture of the symbol of a bipartition at a charge pair. */
hcc_status hcc_render_symbol(const char* bipartition, int charge1, int charge2,
                             char** out);

/* One-runner picture of the interleaved abacus of that symbol (e odd). */
hcc_status hcc_render_fused_abacus(const char* bipartition, int charge1,
                                   int charge2, int e, char** out);

/* The unique partition with 2-core index t and the given quotient pair. */
hcc_status hcc_join(int t, const char* bipartition, char** out);

/* Total size |first| + |second| of a bipartition. */
hcc_status hcc_bipartition_rank(const char* bipartition, int* rank);

/* e-core (as text) and e-weight of a partition. Either out may be NULL. */
hcc_status hcc_core(const char* partition, int e, char** core_out,
                    int* weight_out);

/* Highest-weight test through both routes: the graph criterion (no good
 * removable box for any color) and the periodic-symbol criterion. Fills 0/1.
 * Either out may be NULL. */
hcc_status hcc_highest_weight(const char* bipartition, int charge1,
                              int charge2, int e, int* crystal_hw,
                              int* periodic);

/* --- verification suite ---------------------------------------------------- */

/* Comma-separated list of the accepted check names. */
hcc_status hcc_check_names(char** out);

/* Runs one named consistency check. e_list is a comma-separated list of e
 * values (NULL or "" selects the check's default); max_m/max_rank <= 0 and
 * max_t < 0 likewise. On HCC_OK, *passed is 1/0 and *report carries the full
 * text (a failing check still returns HCC_OK). */
hcc_status hcc_verify(const char* check, const char* e_list, int max_m,
                      int max_rank, int max_t, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* HCCRYSTAL_HCCRYSTAL_H_ */
