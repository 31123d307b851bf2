#ifndef NETDIST_H
#define NETDIST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define ND_PROPERTY_TOTAL (1 << 0)

#define ND_PROPERTY_MIN_EDGES (1 << 1)

#define ND_PROPERTY_LAST_CELL (1 << 2)

#define ND_PROPERTY_ZERO_TAIL (1 << 3)

#define ND_PROPERTY_SECOND_CELL (1 << 4)

#define ND_PROPERTY_BETA_BOUND (1 << 5)

#define ND_PROPERTY_SANDWICH_UPPER (1 << 6)

#define ND_PROPERTY_SANDWICH_LOWER (1 << 7)

#define ND_PROPERTY_MEDIAN_BOUND (1 << 8)

#define ND_PROPERTY_AVERAGE_BOUND (1 << 9)

#define ND_PROPERTY_GINI_GEOMETRIC (1 << 10)

#define ND_PROPERTY_GINI_ROUND_TRIP (1 << 11)

/**
 * Result code of every fallible call.
 */
typedef enum NdStatus {
  ND_STATUS_OK = 0,
  ND_STATUS_NULL_POINTER = 1,
  ND_STATUS_PARSE = 2,
  ND_STATUS_DISCONNECTED = 3,
  ND_STATUS_BUDGET_EXCEEDED = 4,
  ND_STATUS_INVALID_INPUT = 5,
  ND_STATUS_BUFFER_TOO_SMALL = 6,
  ND_STATUS_OVERFLOW = 7,
  ND_STATUS_UTF8 = 8,
  ND_STATUS_PANIC = 9,
} NdStatus;

typedef enum NdRealizability {
  ND_REALIZABILITY_REALIZABLE = 0,
  ND_REALIZABILITY_NOT_REALIZABLE = 1,
  ND_REALIZABILITY_ABORTED = 2,
} NdRealizability;

/**
 * Opaque graph handle.
 */
typedef struct NdGraph NdGraph;

/**
 * Exact fraction, lowest terms, positive denominator.
 */
typedef struct NdRational {
  int64_t num;
  int64_t den;
} NdRational;

typedef struct NdStats {
  uint64_t n;
  struct NdRational average;
  struct NdRational median;
  struct NdRational gini;
  bool beta_holds;
  /**
   * Bitmask of `ND_PROPERTY_*` values the array violates.
   */
  uint32_t violations;
} NdStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *nd_last_error_message(void);

/**
 * Parses a NUL-terminated edge-list text into a new graph handle.
 */
enum NdStatus nd_graph_parse(const char *text, struct NdGraph **out);

/**
 * Builds a graph from `edge_count` pairs stored as `[u0, v0, u1, v1, ...]`.
 */
enum NdStatus nd_graph_from_edges(size_t n,
                                  const size_t *endpoints,
                                  size_t edge_count,
                                  struct NdGraph **out);

enum NdStatus nd_graph_chain(size_t n, struct NdGraph **out);

enum NdStatus nd_graph_complete(size_t n, struct NdGraph **out);

enum NdStatus nd_graph_star(size_t n, struct NdGraph **out);

/**
 * Random connected graph; extra edges appear with probability `p_num / p_den`.
 */
enum NdStatus nd_graph_random(size_t n,
                              int64_t p_num,
                              int64_t p_den,
                              uint64_t seed,
                              struct NdGraph **out);

/**
 * Releases a handle. NULL is ignored.
 */
void nd_graph_free(struct NdGraph *graph);

/**
 * Node count, or 0 for NULL.
 */
size_t nd_graph_node_count(const struct NdGraph *graph);

size_t nd_graph_edge_count(const struct NdGraph *graph);

enum NdStatus nd_graph_is_connected(const struct NdGraph *graph, bool *out);

/**
 * Writes the `N - 1` distance frequencies into `out`, which must hold at
 * least `N - 1` values.
 */
enum NdStatus nd_graph_alpha(const struct NdGraph *graph, uint64_t *out, size_t capacity);

/**
 * Edge-list text of the graph; free with [`nd_string_free`]. NULL on error.
 */
char *nd_graph_to_edge_list(const struct NdGraph *graph);

void nd_string_free(char *s);

/**
 * Average, median, Gini index and validity of an array of `len` counts
 * (`N = len + 1`). The total must equal `N(N-1)/2`.
 */
enum NdStatus nd_alpha_stats(const uint64_t *alpha, size_t len, struct NdStats *out);

/**
 * Bitmask of every single-array property the array violates.
 */
enum NdStatus nd_verify_alpha(const uint64_t *alpha, size_t len, uint32_t *out_mask);

/**
 * Extended majorization `x ⊵ y` of two equal-length sequences.
 */
enum NdStatus nd_extended_majorizes(const uint64_t *x,
                                    size_t x_len,
                                    const uint64_t *y,
                                    size_t y_len,
                                    bool *out);

/**
 * Twice the area under the extended Lorenz curve, minus one.
 */
enum NdStatus nd_gini_geometric(const uint64_t *x, size_t len, struct NdRational *out);

/**
 * Searches for a connected graph with the given distance frequencies
 * (`N <= 8`). `budget == 0` means unlimited. On `ND_REALIZABILITY_REALIZABLE`
 * a new witness handle is stored in `*witness` when `witness` is non-NULL.
 * An exhausted budget returns `ND_STATUS_BUDGET_EXCEEDED` and still fills
 * `status` and `examined`.
 */
enum NdStatus nd_is_realizable(const uint64_t *alpha,
                               size_t len,
                               uint64_t budget,
                               enum NdRealizability *status,
                               uint64_t *examined,
                               struct NdGraph **witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NETDIST_H */
