/*
   Copyright 2026 The exccover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * exccover C API.
 *
 * All objects are opaque handles. Every fallible call returns an
 * exc_status; on failure the context keeps a message retrievable with
 * exc_last_error(). Report functions hand back a NUL-terminated JSON
 * document that the caller releases with exc_string_free().
 */

#ifndef EXCCOVER_H
#define EXCCOVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EXC_API __declspec(dllexport)
#else
#define EXC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exc_status {
  EXC_OK = 0,
  EXC_E_NON_PRIME,
  EXC_E_CAP_EXCEEDED,
  EXC_E_MIXED_FIELDS,
  EXC_E_DIVISION_BY_ZERO,
  EXC_E_NO_EMBEDDING,
  EXC_E_DEGREE_CAP_EXCEEDED,
  EXC_E_NOT_SQUAREFREE,
  EXC_E_NOT_SEPARABLE,
  EXC_E_WILD_CASE,
  EXC_E_PARSE,
  EXC_E_UNKNOWN_SYMBOL,
  EXC_E_NOT_TRANSITIVE,
  EXC_E_NOT_SUBGROUP,
  EXC_E_INVALID_ORDER,
  EXC_E_NOT_PRIME_POWER,
  EXC_E_PRECONDITION,
  EXC_E_INVALID_ARGUMENT,
  EXC_E_NULL_HANDLE,
  EXC_E_INTERNAL
} exc_status;

typedef struct exc_context exc_context;
typedef struct exc_field exc_field;
typedef struct exc_map exc_map;

EXC_API const char* exc_version(void);
EXC_API const char* exc_status_name(exc_status status);

/* Context: RNG seed, caps and the last error. */
EXC_API exc_status exc_context_create(uint64_t seed, exc_context** out);
EXC_API void exc_context_destroy(exc_context* ctx);
EXC_API exc_status exc_context_set_enum_cap(exc_context* ctx, uint64_t cap);
EXC_API exc_status exc_context_set_field_cap(exc_context* ctx, uint64_t cap);
/* Empty string when the last call succeeded. */
EXC_API const char* exc_last_error(const exc_context* ctx);
/* Byte offset of the last parse error, or -1. */
EXC_API int64_t exc_last_error_offset(const exc_context* ctx);

/* Finite field F_q. */
EXC_API exc_status exc_field_create(exc_context* ctx, uint64_t q, exc_field** out);
EXC_API void exc_field_destroy(exc_field* field);
EXC_API uint64_t exc_field_order(const exc_field* field);

/* Rational map num/den over a field; polynomials in the text grammar. */
EXC_API exc_status exc_map_create(exc_context* ctx, const exc_field* field, const char* num,
                                  const char* den, exc_map** out);
EXC_API void exc_map_destroy(exc_map* map);
EXC_API unsigned exc_map_degree(const exc_map* map);
/* Fiber sizes over P^1(F_{q^m}); sets *bijective. */
EXC_API exc_status exc_map_audit(exc_context* ctx, const exc_map* map, unsigned m,
                                 int* bijective);
EXC_API exc_status exc_map_is_exceptional(exc_context* ctx, const exc_map* map,
                                          int* exceptional, unsigned* k);

/* Parses and reprints a polynomial in canonical form. */
EXC_API exc_status exc_poly_normalize(exc_context* ctx, const exc_field* field, const char* text,
                                      char** out);

/* Reports. `ms` may be NULL with n_ms = 0 for the default sweep. */
EXC_API exc_status exc_report_analyze(exc_context* ctx, uint64_t q, const char* num,
                                      const char* den, const unsigned* ms, size_t n_ms,
                                      const char* group_spec, int exclude_branch_fibers,
                                      char** json_out);
/* h may be NULL for the nonvanishing family built from a. */
EXC_API exc_status exc_report_superelliptic(exc_context* ctx, uint64_t q, unsigned n,
                                            const char* a, const char* gamma, const char* h,
                                            const unsigned* ms, size_t n_ms,
                                            int exclude_branch_fibers, char** json_out);
EXC_API exc_status exc_report_groups(exc_context* ctx, const char* spec_text, char** json_out);
/* Optional decimal strings may be NULL; castelnuovo may be NULL or 4 values. */
EXC_API exc_status exc_report_bounds(exc_context* ctx, uint64_t n, uint64_t gx, uint64_t gy,
                                     const char* g_order, const char* u_size, const char* q,
                                     const char* pa, const int64_t* castelnuovo,
                                     char** json_out);
EXC_API exc_status exc_report_examples(exc_context* ctx, char** json_out);

EXC_API void exc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
