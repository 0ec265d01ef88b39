/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef RENNER_FFI_H
#define RENNER_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Largest rank accepted by [`renner_context_new`].
 */
#define RENNER_MAX_CONTEXT_RANK 4

typedef enum RennerStatus {
  RENNER_STATUS_OK = 0,
  RENNER_STATUS_NULL_ARGUMENT = 1,
  RENNER_STATUS_INVALID_UTF8 = 2,
  RENNER_STATUS_PARSE = 3,
  RENNER_STATUS_NOT_IN_MONOID = 4,
  RENNER_STATUS_UNSUPPORTED_SIZE = 5,
  RENNER_STATUS_UNKNOWN_LABEL = 6,
  RENNER_STATUS_INDEX_OUT_OF_RANGE = 7,
  /**
   * Division by zero, a singular matrix or a non-polynomial entry.
   */
  RENNER_STATUS_ARITHMETIC = 8,
  /**
   * An internal consistency check failed.
   */
  RENNER_STATUS_INCONSISTENT = 9,
  RENNER_STATUS_IO = 10,
  RENNER_STATUS_PANIC = 11,
} RennerStatus;

typedef enum RennerMonoidKind {
  RENNER_MONOID_KIND_ROOK = 0,
  RENNER_MONOID_KIND_SYMPLECTIC = 1,
} RennerMonoidKind;

typedef enum RennerTableKind {
  RENNER_TABLE_KIND_M = 0,
  RENNER_TABLE_KIND_A = 1,
  RENNER_TABLE_KIND_B = 2,
  RENNER_TABLE_KIND_Y = 3,
  RENNER_TABLE_KIND_MQ = 4,
  RENNER_TABLE_KIND_YQ = 5,
  RENNER_TABLE_KIND_AQ = 6,
} RennerTableKind;

/**
 * Monoid context for element-level computations.
 */
typedef struct RennerContext RennerContext;

/**
 * A computed table with its labels and exact entries.
 */
typedef struct RennerTable RennerTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *renner_version(void);

/**
 * Message for the most recent failure on this thread, or null after a success.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *renner_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void renner_string_free(char *s);

/**
 * Creates a context for the monoid of the given kind and rank `1..=RENNER_MAX_CONTEXT_RANK`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum RennerStatus renner_context_new(enum RennerMonoidKind kind,
                                     size_t n,
                                     struct RennerContext **out);

/**
 * # Safety
 * `ctx` must be null or a handle from [`renner_context_new`] not yet freed.
 */
void renner_context_free(struct RennerContext *ctx);

/**
 * Number of monoid elements.
 *
 * # Safety
 * `ctx` must be a live context handle and `out` writable.
 */
enum RennerStatus renner_context_element_count(const struct RennerContext *ctx, size_t *out);

/**
 * Reduces `T_r` to standard elements. `element` is an image array such as `"0,3,0,0"`;
 * the result is a JSON object from class labels to coefficient polynomials.
 *
 * # Safety
 * `ctx` must be a live context handle, `element` a NUL-terminated string and `out` writable.
 */
enum RennerStatus renner_reduce(const struct RennerContext *ctx, const char *element, char **out);

/**
 * Computes a table. `max_work` bounds the estimated operation count; 0 selects the default.
 *
 * # Safety
 * `out` must be writable.
 */
enum RennerStatus renner_table_new(enum RennerMonoidKind kind,
                                   size_t n,
                                   enum RennerTableKind table,
                                   uint64_t max_work,
                                   struct RennerTable **out);

/**
 * # Safety
 * `table` must be null or a handle from [`renner_table_new`] not yet freed.
 */
void renner_table_free(struct RennerTable *table);

/**
 * Number of rows (classes); 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a live table handle.
 */
size_t renner_table_rows(const struct RennerTable *table);

/**
 * Number of columns (characters); 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a live table handle.
 */
size_t renner_table_cols(const struct RennerTable *table);

/**
 * Label of row `i`, such as `"(1^2,0)"`.
 *
 * # Safety
 * `table` must be a live table handle and `out` writable.
 */
enum RennerStatus renner_table_row_label(const struct RennerTable *table, size_t i, char **out);

/**
 * Label of column `j`.
 *
 * # Safety
 * `table` must be a live table handle and `out` writable.
 */
enum RennerStatus renner_table_col_label(const struct RennerTable *table, size_t j, char **out);

/**
 * Entry `(i, j)` as text, such as `"q^4-q^2"`.
 *
 * # Safety
 * `table` must be a live table handle and `out` writable.
 */
enum RennerStatus renner_table_entry(const struct RennerTable *table,
                                     size_t i,
                                     size_t j,
                                     char **out);

/**
 * The table as the JSON artifact also written by the command-line tool.
 *
 * # Safety
 * `table` must be a live table handle and `out` writable.
 */
enum RennerStatus renner_table_to_json(const struct RennerTable *table, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RENNER_FFI_H */
