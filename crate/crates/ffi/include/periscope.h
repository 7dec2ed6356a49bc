#ifndef PERISCOPE_H
#define PERISCOPE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PeriStatus {
  PERI_STATUS_OK = 0,
  PERI_STATUS_NULL_POINTER = 1,
  PERI_STATUS_INVALID_UTF8 = 2,
  PERI_STATUS_INVALID_GRAPH6 = 3,
  PERI_STATUS_INVALID_GRAPH = 4,
  PERI_STATUS_INVALID_ARGUMENT = 5,
  PERI_STATUS_DISCONNECTED = 6,
  PERI_STATUS_UNSUPPORTED_SIZE = 7,
  PERI_STATUS_OVERFLOW = 8,
  PERI_STATUS_PANIC = 9,
} PeriStatus;

/**
 * Opaque graph handle.
 */
typedef struct PeriGraph PeriGraph;

/**
 * All indices of one graph.
 */
typedef struct PeriIndices {
  uint64_t n;
  uint64_t peri;
  uint64_t eperi;
  uint64_t espr;
  uint64_t mo;
  uint64_t mo_star;
  uint64_t nt;
  uint64_t irr;
} PeriIndices;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *peri_last_error_message(void);

/**
 * Parses a NUL-terminated graph6 string into a new handle.
 *
 * # Safety
 * `g6` must be NULL or a valid C string; `out` must be NULL or writable.
 */
enum PeriStatus peri_graph_from_graph6(const char *g6, struct PeriGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (may be NULL when
 * `edge_count` is 0); `out` must be NULL or writable.
 */
enum PeriStatus peri_graph_from_edges(size_t n,
                                      const size_t *edges,
                                      size_t edge_count,
                                      struct PeriGraph **out);

/**
 * Builds a member of a named family (`path`, `spider`, `eperi_extremal`, ...).
 *
 * # Safety
 * `family` must be a valid C string; `params` must point to `param_count`
 * values (may be NULL when `param_count` is 0); `out` must be writable.
 */
enum PeriStatus peri_generate(const char *family,
                              const size_t *params,
                              size_t param_count,
                              struct PeriGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must be NULL or a handle returned by this library and not yet freed.
 */
void peri_graph_free(struct PeriGraph *g);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t peri_graph_vertex_count(const struct PeriGraph *g);

/**
 * Edge count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t peri_graph_edge_count(const struct PeriGraph *g);

/**
 * Encodes the graph as graph6; release the string with [`peri_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum PeriStatus peri_graph_to_graph6(const struct PeriGraph *g, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from [`peri_graph_to_graph6`] not yet freed.
 */
void peri_string_free(char *s);

/**
 * Computes every index. Fails with `Disconnected` for disconnected graphs.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum PeriStatus peri_compute_indices(const struct PeriGraph *g, struct PeriIndices *out);

/**
 * Writes whether every vertex pair has a symmetric distance-difference
 * profile.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum PeriStatus peri_is_ultra_nt_balanced(const struct PeriGraph *g, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERISCOPE_H */
