#ifndef SOMBOR_H
#define SOMBOR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible function.
typedef enum SomborStatus {
  SOMBOR_STATUS_OK = 0,
  // A required pointer argument was NULL.
  SOMBOR_STATUS_NULL_POINTER,
  // A string argument was not valid UTF-8.
  SOMBOR_STATUS_INVALID_UTF8,
  // Text failed to parse (edge list, graph6, family spec, or value).
  SOMBOR_STATUS_PARSE_ERROR,
  // The edge would be a self-loop.
  SOMBOR_STATUS_SELF_LOOP,
  // A vertex index is out of range.
  SOMBOR_STATUS_VERTEX_OUT_OF_RANGE,
  // The edge is already present.
  SOMBOR_STATUS_DUPLICATE_EDGE,
  // The edge is not present.
  SOMBOR_STATUS_MISSING_EDGE,
  // Parameters outside a formula's validity domain.
  SOMBOR_STATUS_OUT_OF_DOMAIN,
  // The callee panicked; the out parameters are untouched.
  SOMBOR_STATUS_PANIC,
} SomborStatus;

// Opaque graph handle.
typedef struct SomborGraph SomborGraph;

// Opaque exact-value handle (a sum of rational multiples of square roots).
typedef struct SomborValue SomborValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a graph with `n` isolated vertices.
//
// # Safety
// `out` must be valid for writes.
enum SomborStatus sombor_graph_new(size_t n, struct SomborGraph **out);

// Deep copy of a graph handle.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_clone(const struct SomborGraph *g, struct SomborGraph **out);

// Releases a graph handle. NULL is ignored.
//
// # Safety
// `g` must be NULL or a handle not released before.
void sombor_graph_free(struct SomborGraph *g);

// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_vertex_count(const struct SomborGraph *g, size_t *out);

// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_edge_count(const struct SomborGraph *g, size_t *out);

// Inserts the edge `uv` (0-based endpoints).
//
// # Safety
// `g` must be a live handle.
enum SomborStatus sombor_graph_add_edge(struct SomborGraph *g, size_t u, size_t v);

// Removes the edge `uv`.
//
// # Safety
// `g` must be a live handle.
enum SomborStatus sombor_graph_remove_edge(struct SomborGraph *g, size_t u, size_t v);

// Removes vertex `v`; later vertices shift down by one.
//
// # Safety
// `g` must be a live handle.
enum SomborStatus sombor_graph_remove_vertex(struct SomborGraph *g, size_t v);

// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_has_edge(const struct SomborGraph *g, size_t u, size_t v, bool *out);

// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_degree(const struct SomborGraph *g, size_t v, size_t *out);

// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_is_connected(const struct SomborGraph *g, bool *out);

// Complement graph as a new handle.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_complement(const struct SomborGraph *g, struct SomborGraph **out);

// Parses the DIMACS-flavored edge-list format (`p edge n m` / `e u v`).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid for writes.
enum SomborStatus sombor_graph_from_edge_list(const char *text, struct SomborGraph **out);

// Parses a graph6 string.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid for writes.
enum SomborStatus sombor_graph_from_graph6(const char *text, struct SomborGraph **out);

// Builds a named family member from its text form, e.g. `"grid:7,9"`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be valid for writes.
enum SomborStatus sombor_graph_generate(const char *spec, struct SomborGraph **out);

// Canonical edge-list rendering of the graph.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_to_edge_list(const struct SomborGraph *g, char **out);

// graph6 rendering of the graph.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_to_graph6(const struct SomborGraph *g, char **out);

// The Sombor index of the graph as a new exact-value handle.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_graph_index(const struct SomborGraph *g, struct SomborValue **out);

// The exact closed-form Sombor index for a family spec such as
// `"dutchwindmill:5,3"`. Fails with `OutOfDomain` when the parameters are
// outside the formula's validity range.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be valid for writes.
enum SomborStatus sombor_closed_form(const char *spec, struct SomborValue **out);

// Parses an exact value from its text rendering, e.g.
// `"2*sqrt(2) + 3*sqrt(5) + 10"`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid for writes.
enum SomborStatus sombor_value_parse(const char *text, struct SomborValue **out);

// Releases a value handle. NULL is ignored.
//
// # Safety
// `v` must be NULL or a handle not released before.
void sombor_value_free(struct SomborValue *v);

// Exact text rendering, round-trippable through [`sombor_value_parse`].
//
// # Safety
// `v` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_value_to_string(const struct SomborValue *v, char **out);

// Decimal rendering with error below `10^-digits`.
//
// # Safety
// `v` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_value_to_decimal(const struct SomborValue *v, uint32_t digits, char **out);

// Exact three-way comparison: writes -1, 0 or 1.
//
// # Safety
// `a` and `b` must be live handles; `out` must be valid for writes.
enum SomborStatus sombor_value_compare(const struct SomborValue *a,
                                       const struct SomborValue *b,
                                       int *out);

// True when the value is a positive integer.
//
// # Safety
// `v` must be a live handle; `out` must be valid for writes.
enum SomborStatus sombor_value_is_positive_integer(const struct SomborValue *v, bool *out);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void sombor_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOMBOR_H */
