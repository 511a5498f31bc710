#ifndef GONOGRAPH_H
#define GONOGRAPH_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GonoStatus {
  GONO_STATUS_OK = 0,
  GONO_STATUS_NULL_POINTER = 1,
  GONO_STATUS_INVALID_ARGUMENT = 2,
  GONO_STATUS_OVERFLOW = 3,
  GONO_STATUS_DISCONNECTED = 4,
  GONO_STATUS_SIZE_LIMIT = 5,
  GONO_STATUS_VERTEX_OUT_OF_RANGE = 6,
  GONO_STATUS_INVALID_GRAPH = 7,
  GONO_STATUS_NON_CYCLIC_MODEL = 8,
  GONO_STATUS_CAP_EXCEEDED = 9,
  GONO_STATUS_PRECONDITION = 10,
  GONO_STATUS_PARSE = 11,
  GONO_STATUS_IO = 12,
  GONO_STATUS_BUFFER_TOO_SMALL = 13,
  GONO_STATUS_PANIC = 99,
} GonoStatus;

/**
 * Opaque graph handle.
 */
typedef struct GonoGraph GonoGraph;

/**
 * Opaque handle to a subset of Z/nZ.
 */
typedef struct GonoSet GonoSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *gono_last_error_message(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void gono_string_free(char *s);

/**
 * `F_k` with `F_0 = 0`, `F_1 = 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum GonoStatus gono_fib(uint32_t k, int64_t *out);

/**
 * The strip graph with `n + 1` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum GonoStatus gono_graph_strip(size_t n, struct GonoGraph **out);

/**
 * The fan graph with `n + 1` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum GonoStatus gono_graph_fan(size_t n, struct GonoGraph **out);

/**
 * Builds a graph from `edge_count` triples `(u, v, multiplicity)` laid out
 * consecutively in `edges`.
 *
 * # Safety
 * `edges` must hold `3 * edge_count` values; `out` must be writable.
 */
enum GonoStatus gono_graph_from_edges(size_t vertex_count,
                                      const uint32_t *edges,
                                      size_t edge_count,
                                      struct GonoGraph **out);

/**
 * Parses the JSON graph format written by `gonograph gen`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum GonoStatus gono_graph_from_json(const char *json, struct GonoGraph **out);

/**
 * JSON text for the graph; release with [`gono_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GonoStatus gono_graph_to_json(const struct GonoGraph *g, char **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed. NULL is ignored.
 */
void gono_graph_free(struct GonoGraph *g);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t gono_graph_vertex_count(const struct GonoGraph *g);

/**
 * `|E| - |V| + 1`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GonoStatus gono_graph_genus(const struct GonoGraph *g, int64_t *out);

/**
 * Number of spanning trees, i.e. the order of the Jacobian.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GonoStatus gono_spanning_tree_count(const struct GonoGraph *g, int64_t *out);

/**
 * Number of spanning two-forests separating `i` and `j` from vertex 0.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GonoStatus gono_two_forest_count(const struct GonoGraph *g, size_t i, size_t j, int64_t *out);

/**
 * Baker–Norine rank of the divisor with one coefficient per vertex.
 *
 * # Safety
 * `g` must be a live handle; `coefficients` must hold `len` values.
 */
enum GonoStatus gono_rank(const struct GonoGraph *g,
                          const int64_t *coefficients,
                          size_t len,
                          int64_t *out);

/**
 * Least degree of a divisor of rank at least `r`, by exhaustive Dhar search.
 * If `witness` is not NULL it receives one coefficient per vertex.
 *
 * # Safety
 * `g` must be a live handle; `witness` must be NULL or hold
 * `gono_graph_vertex_count(g)` values.
 */
enum GonoStatus gono_gonality(const struct GonoGraph *g,
                              int64_t r,
                              int64_t *degree,
                              int64_t *witness);

/**
 * The generator images `{phi(v_j - v_0)}` in the cyclic model of the
 * Jacobian. Fails with `GONO_STATUS_NON_CYCLIC_MODEL` when there is none.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GonoStatus gono_set_from_graph(const struct GonoGraph *g, struct GonoSet **out);

/**
 * A set of residues modulo `modulus`.
 *
 * # Safety
 * `residues` must hold `len` values; `out` must be writable.
 */
enum GonoStatus gono_set_new(uint64_t modulus,
                             const uint64_t *residues,
                             size_t len,
                             struct GonoSet **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed. NULL is ignored.
 */
void gono_set_free(struct GonoSet *s);

/**
 * Modulus, or 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
uint64_t gono_set_modulus(const struct GonoSet *s);

/**
 * Number of elements, or 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t gono_set_len(const struct GonoSet *s);

/**
 * Copies the elements in increasing order. `written` always receives the
 * set size; if it exceeds `capacity` nothing is copied and
 * `GONO_STATUS_BUFFER_TOO_SMALL` is returned.
 *
 * # Safety
 * `s` must be a live handle; `buf` must hold `capacity` values.
 */
enum GonoStatus gono_set_elements(const struct GonoSet *s,
                                  uint64_t *buf,
                                  size_t capacity,
                                  size_t *written);

/**
 * The `m`-fold sumset `A + ... + A`, `m >= 1`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum GonoStatus gono_set_sumset(const struct GonoSet *s, uint32_t m, struct GonoSet **out);

/**
 * Least `m` with `mA` the whole group. `*found` is false when no such `m`
 * exists (the set does not generate).
 *
 * # Safety
 * `s` must be a live handle; `m` and `found` must be writable.
 */
enum GonoStatus gono_set_covering_number(const struct GonoSet *s, uint32_t *m, bool *found);

/**
 * Least `d >= r` for which some `D` satisfies `D - rA ⊆ (d - r)A`, with the
 * least such `D`. The set must contain 0; for a graph's cyclic model this
 * is its `r`-gonality.
 *
 * # Safety
 * `s` must be a live handle; `degree` must be writable; `witness` may be NULL.
 */
enum GonoStatus gono_set_gonality(const struct GonoSet *s,
                                  uint32_t r,
                                  uint32_t *degree,
                                  uint64_t *witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GONOGRAPH_H */
