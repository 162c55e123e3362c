/* Copyright 2026 The afra-toolkit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the solver library.
 *
 * Frameworks are opaque handles. Every call returns an afra_status; on
 * failure afra_last_error() describes the problem until the next call on
 * the same thread. Strings handed out through `out` parameters are owned
 * by the caller and released with afra_string_free().
 */

#ifndef AFRA_AFRA_H
#define AFRA_AFRA_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(AFRA_BUILDING_LIBRARY)
#    define AFRA_API __declspec(dllexport)
#  else
#    define AFRA_API __declspec(dllimport)
#  endif
#else
#  define AFRA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afra_status {
  AFRA_OK = 0,
  AFRA_E_INVALID_ID,
  AFRA_E_DUPLICATE_ID,
  AFRA_E_DANGLING_SOURCE,
  AFRA_E_DANGLING_TARGET,
  AFRA_E_CYCLIC_TARGET_CHAIN,
  AFRA_E_UNKNOWN_ATTACK,
  AFRA_E_UNKNOWN_ELEMENT,
  AFRA_E_NOT_AN_ATTACK,
  AFRA_E_TOO_LARGE,
  AFRA_E_NOT_PLAIN_AF,
  AFRA_E_INVALID_EAF,
  AFRA_E_INVALID_HOAF,
  AFRA_E_PRECONDITION,
  AFRA_E_SYNTAX,
  AFRA_E_BAD_ARGUMENT, /* null pointer, unknown semantics or format name */
  AFRA_E_INTERNAL
} afra_status;

typedef struct afra_framework afra_framework;

typedef struct afra_solve_options {
  size_t max_enum;         /* 0 selects the default bound */
  long long timeout_ms;    /* <= 0 means no timeout */
  int native_route;        /* nonzero evaluates definitions directly */
} afra_solve_options;

typedef struct afra_stats {
  size_t arguments;
  size_t attacks;
  size_t defeats;
  int plain; /* no attack targets an attack */
} afra_stats;

AFRA_API const char* afra_version(void);
AFRA_API const char* afra_last_error(void);
AFRA_API const char* afra_status_name(afra_status status);
AFRA_API void afra_string_free(char* s);

/* Documents in the AFRA, EAF or HOAF text formats. EAF and HOAF inputs are
 * translated into AFRA frameworks. */
AFRA_API afra_status afra_parse(const char* text, afra_framework** out);
AFRA_API afra_status afra_import(const char* kind, const char* text,
                                 afra_framework** out);
AFRA_API void afra_framework_free(afra_framework* fw);

AFRA_API afra_status afra_stats_get(const afra_framework* fw,
                                    afra_stats* out);

/* semantics: complete, grounded, preferred, stable, semi_stable, ideal,
 * admissible, conflict_free. format: text or json. `options` may be
 * NULL. */
AFRA_API afra_status afra_solve(const afra_framework* fw,
                                const char* semantics, const char* format,
                                const afra_solve_options* options, char** out);

/* format: text, json, dot (defeat graph) or hasse-dot. */
AFRA_API afra_status afra_render(const afra_framework* fw, const char* format,
                                 const afra_solve_options* options,
                                 char** out);

/* The flattened classical framework in apx syntax. */
AFRA_API afra_status afra_flatten(const afra_framework* fw, char** out);

/* Brute-force cross check of the solver. `agree` receives 1 or 0. */
AFRA_API afra_status afra_oracle(const afra_framework* fw,
                                 const char* semantics, const char* format,
                                 const afra_solve_options* options,
                                 int* agree, char** out);

#ifdef __cplusplus
}
#endif

#endif /* AFRA_AFRA_H */
