#ifndef SG_H
#define SG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum SgStatus {
  SgOk = 0,
  /**
   * Search completed and no homomorphism exists.
   */
  SgNotFound = 1,
  SgInvalidArgument = 2,
  SgParseError = 3,
  SgNotCubic = 4,
  SgNotConnected = 5,
  /**
   * A step the case analysis promises to succeed failed.
   */
  SgFalsified = 6,
} SgStatus;

/**
 * Which fixed target graph to hand out.
 */
typedef enum SgTarget {
  SgTargetSp9 = 0,
  SgTargetSp9Dagger = 1,
  SgTargetSp9Star = 2,
  SgTargetK4sPlus = 3,
  SgTargetK4sMinus = 4,
} SgTarget;

/**
 * Opaque signed-graph handle.
 */
typedef struct SgGraph SgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy the message of the last error on this thread into `buf` (always
 * NUL-terminated, truncated to `len`). Returns the full message length.
 */
uintptr_t sg_last_error_message(char *buf, uintptr_t len);

/**
 * Parse the `.sg` text format into a new graph handle.
 */
enum SgStatus sg_graph_parse(const char *text, struct SgGraph **out);

/**
 * Combine a graph6 topology with a `+/-` sign string (sorted edge order).
 */
enum SgStatus sg_graph_from_graph6(const char *g6, const char *signs, struct SgGraph **out);

/**
 * A fresh handle to one of the fixed target graphs.
 */
enum SgStatus sg_graph_target(enum SgTarget which, struct SgGraph **out);

void sg_graph_free(struct SgGraph *g);

uint32_t sg_graph_vertex_count(const struct SgGraph *g);

uint32_t sg_graph_edge_count(const struct SgGraph *g);

/**
 * Serialize to the `.sg` text format; free the result with `sg_string_free`.
 */
char *sg_graph_to_text(const struct SgGraph *g);

void sg_string_free(char *s);

/**
 * Decide a sign-preserving homomorphism of `g` to `h`, honouring `npins`
 * (source, target) pairs. On success writes one image per source vertex
 * into `images` (may be null to discard).
 */
enum SgStatus sg_find_homomorphism(const struct SgGraph *g,
                                   const struct SgGraph *h,
                                   const uint32_t *pin_sources,
                                   const uint32_t *pin_targets,
                                   uintptr_t npins,
                                   uint32_t *images);

/**
 * Exact chromatic number; on success writes a witness labelling into
 * `labels` (may be null) and the value into `chi`.
 */
enum SgStatus sg_chromatic_number(const struct SgGraph *g, uint32_t *chi, uint32_t *labels);

/**
 * Constructive 10-colouring of a connected cubic graph; writes one label in
 * 0..=9 per vertex into `labels`.
 */
enum SgStatus sg_ten_colouring(const struct SgGraph *g, uint32_t *labels);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SG_H */
