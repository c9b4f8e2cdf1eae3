#ifndef EDGEGRAPH_H
#define EDGEGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>

/**
 * Result of every fallible call.
 */
typedef enum EgStatus {
  EgStatus_Ok = 0,
  EgStatus_NullArgument = 1,
  EgStatus_InvalidUtf8 = 2,
  EgStatus_SyntaxError = 3,
  EgStatus_DocumentError = 4,
  EgStatus_Condition1Violation = 5,
  EgStatus_Condition2Violation = 6,
  EgStatus_Condition3Violation = 7,
  EgStatus_WeightError = 8,
  EgStatus_NonConvergence = 9,
  EgStatus_InvalidArgument = 10,
  EgStatus_Panic = 11,
} EgStatus;

/**
 * Binary operations on flow graphs.
 */
typedef enum EgOp {
  EgOp_Overlay = 0,
  EgOp_Into = 1,
  EgOp_Pits = 2,
  EgOp_Tips = 3,
  EgOp_Subtract = 4,
} EgOp;

typedef enum EgSemiring {
  EgSemiring_Tropical = 0,
  EgSemiring_MinMax = 1,
  EgSemiring_MaxMin = 2,
} EgSemiring;

typedef enum EgEndKind {
  EgEndKind_Pit = 0,
  EgEndKind_Tip = 1,
} EgEndKind;

/**
 * A graph in flow representation.
 */
typedef struct EgFlow EgFlow;

/**
 * Path weights between edge ends, in key order.
 */
typedef struct EgPathMap EgPathMap;

/**
 * An edge graph expression.
 */
typedef struct EgTerm EgTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next `eg_*` call on the same thread.
 */
const char *eg_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void eg_string_free(char *s);

/**
 * Parses an expression such as `"1 >> 2 + 3"`.
 *
 * # Safety
 * `expr` must be null or NUL-terminated; `out` must be null or writable.
 */
enum EgStatus eg_term_parse(const char *expr, struct EgTerm **out);

/**
 * # Safety
 * `term` must be null or a live handle from this library.
 */
void eg_term_free(struct EgTerm *term);

/**
 * Renders a term in expression syntax.
 *
 * # Safety
 * `term` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_term_render(const struct EgTerm *term, char **out);

/**
 * The normal form of a term.
 *
 * # Safety
 * `term` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_term_normalize(const struct EgTerm *term, struct EgTerm **out);

/**
 * Whether two terms denote the same graph.
 *
 * # Safety
 * `a`, `b` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_term_equivalent(const struct EgTerm *a, const struct EgTerm *b, bool *out);

/**
 * Evaluates a term to its flow representation.
 *
 * # Safety
 * `term` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_term_eval(const struct EgTerm *term, struct EgFlow **out);

/**
 * # Safety
 * `flow` must be null or a live handle from this library.
 */
void eg_flow_free(struct EgFlow *flow);

/**
 * Reads and validates a JSON flow document.
 *
 * # Safety
 * `document` must be null or NUL-terminated; `out` must be null or writable.
 */
enum EgStatus eg_flow_from_document(const char *document, struct EgFlow **out);

/**
 * Writes the JSON flow document of a graph.
 *
 * # Safety
 * `flow` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_flow_to_document(const struct EgFlow *flow, char **out);

/**
 * Writes a Graphviz rendering of a graph.
 *
 * # Safety
 * `flow` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_flow_to_dot(const struct EgFlow *flow, char **out);

/**
 * Number of nodes; 0 for a null handle.
 *
 * # Safety
 * `flow` must be null or live.
 */
size_t eg_flow_node_count(const struct EgFlow *flow);

/**
 * Combines two graphs with `op`.
 *
 * # Safety
 * `a`, `b` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_flow_combine(const struct EgFlow *a,
                              enum EgOp op,
                              const struct EgFlow *b,
                              struct EgFlow **out);

/**
 * Whether `a` is a subgraph of `b`.
 *
 * # Safety
 * `a`, `b` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_flow_precedes(const struct EgFlow *a, const struct EgFlow *b, bool *out);

/**
 * Whether two graphs are equal.
 *
 * # Safety
 * `a`, `b` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_flow_equal(const struct EgFlow *a, const struct EgFlow *b, bool *out);

/**
 * The canonical term of a graph.
 *
 * # Safety
 * `flow` must be null or live; `out` must be null or writable.
 */
enum EgStatus eg_flow_canonical_term(const struct EgFlow *flow, struct EgTerm **out);

/**
 * Closed path weights of `term`, with weights given as a weight table
 * (`LABEL NUMBER` lines, `* NUMBER` for a default).
 *
 * # Safety
 * `term` must be null or live; `weights` null or NUL-terminated; `out`
 * null or writable.
 */
enum EgStatus eg_paths(const struct EgTerm *term,
                       const char *weights,
                       enum EgSemiring semiring,
                       struct EgPathMap **out);

/**
 * # Safety
 * `map` must be null or a live handle from this library.
 */
void eg_path_map_free(struct EgPathMap *map);

/**
 * Number of entries; 0 for a null handle.
 *
 * # Safety
 * `map` must be null or live.
 */
size_t eg_path_map_len(const struct EgPathMap *map);

/**
 * Reads entry `index`. Label pointers are borrowed from the map and stay
 * valid until it is freed. Any out-pointer may be null.
 *
 * # Safety
 * `map` must be null or live; non-null out-pointers must be writable.
 */
enum EgStatus eg_path_map_entry(const struct EgPathMap *map,
                                size_t index,
                                enum EgEndKind *from_kind,
                                const char **from_label,
                                enum EgEndKind *to_kind,
                                const char **to_label,
                                double *weight);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDGEGRAPH_H */
