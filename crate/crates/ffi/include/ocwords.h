#ifndef OCWORDS_H
#define OCWORDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  OCW_STATUS_OK = 0,
  OCW_STATUS_NULL_POINTER = 1,
  OCW_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed word, oc-sequence or directive, or a word over too many
   * symbols.
   */
  OCW_STATUS_INVALID_INPUT = 3,
  /**
   * The oc-sequence is empty, starts with 0, or no Sturmian word has it.
   */
  OCW_STATUS_NOT_STURMIAN = 4,
  OCW_STATUS_OUT_OF_RANGE = 5,
  OCW_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  OCW_STATUS_INTERNAL = 7,
} OcwStatus;

/**
 * An immutable word.
 */
typedef struct OcwWord OcwWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a word (one symbol per character; `""` is the empty word).
 *
 * # Safety
 * `text` must be NULL or a NUL-terminated string; `out` must be NULL or
 * writable.
 */
OcwStatus ocw_word_new(const char *text, OcwWord **out);

/**
 * Releases a word. NULL is ignored.
 *
 * # Safety
 * `word` must be NULL or a handle not yet freed.
 */
void ocw_word_free(OcwWord *word);

/**
 * Number of symbols; 0 for NULL.
 *
 * # Safety
 * `word` must be NULL or a live handle.
 */
size_t ocw_word_len(const OcwWord *word);

/**
 * The word as UTF-8 text.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
OcwStatus ocw_word_to_string(const OcwWord *word, char **out);

/**
 * The oc-sequence as a string of `0` and `1`.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
OcwStatus ocw_word_oc(const OcwWord *word, char **out);

/**
 * Writes the border array `B[1..n]` into `buf`. `*written` always
 * receives `n`; if `capacity < n` nothing is written and
 * `OCW_STATUS_BUFFER_TOO_SMALL` is returned, so a call with `buf = NULL`,
 * `capacity = 0` queries the size.
 *
 * # Safety
 * `word` must be a live handle; `buf` must hold `capacity` elements;
 * `written` must be writable.
 */
OcwStatus ocw_word_border_array(const OcwWord *word, size_t *buf, size_t capacity, size_t *written);

/**
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
OcwStatus ocw_word_is_closed(const OcwWord *word, bool *out);

/**
 * Smallest period; 1 for the empty word.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
OcwStatus ocw_word_period(const OcwWord *word, size_t *out);

/**
 * Balance of a word over at most two symbols.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
OcwStatus ocw_word_is_balanced(const OcwWord *word, bool *out);

/**
 * The Sturmian word starting with `a` whose oc-sequence is `oc`. With
 * `validate` false the round-trip check is skipped.
 *
 * # Safety
 * `oc` must be a NUL-terminated string; `out` must be writable.
 */
OcwStatus ocw_reconstruct(const char *oc, bool validate, OcwWord **out);

/**
 * The length-`len` prefix of the standard word with directive digits
 * `directive` (e.g. `"2,2,1"`).
 *
 * # Safety
 * `directive` must be a NUL-terminated string; `out` must be writable.
 */
OcwStatus ocw_standard_prefix(const char *directive, size_t len, OcwWord **out);

/**
 * The first `len` bits of the oc-sequence of a standard word, from its
 * closed form.
 *
 * # Safety
 * `directive` must be a NUL-terminated string; `out` must be writable.
 */
OcwStatus ocw_oc_closed_form(const char *directive, size_t len, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void ocw_string_free(char *s);

/**
 * Message of the last failure on this thread (empty if none). The pointer
 * stays valid until the next failing call on this thread.
 */
const char *ocw_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCWORDS_H */
