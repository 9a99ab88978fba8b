// Copyright 2026 The abelcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the abelcount library.  All integers cross the boundary
 * as decimal strings; results come back as owned text handles. */

#ifndef ABELCOUNT_ABELCOUNT_H_
#define ABELCOUNT_ABELCOUNT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AC_API __declspec(dllexport)
#else
#define AC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ac_status {
  AC_OK = 0,
  AC_ERR_DOMAIN = 1,   /* a mathematical precondition failed */
  AC_ERR_USAGE = 2,    /* malformed argument or unknown name */
  AC_ERR_BUDGET = 3,   /* memory or size limit exceeded */
  AC_ERR_INTERNAL = 4, /* a formula produced an impossible value */
  AC_ERR_MISMATCH = 5  /* oracle verification found a disagreement */
} ac_status;

typedef struct ac_text ac_text;
typedef struct ac_enum ac_enum;

typedef enum ac_enum_format {
  AC_FORMAT_KEYS = 0,
  AC_FORMAT_ELEMENTS = 1,
  AC_FORMAT_ISOTYPES = 2
} ac_enum_format;

AC_API const char* ac_text_data(const ac_text* text);
AC_API size_t ac_text_size(const ac_text* text);
AC_API void ac_text_free(ac_text* text);

/* Message for the most recent failure on this thread ("" if none). */
AC_API const char* ac_last_error(void);
AC_API const char* ac_version(void);

/* Counting over Z_{n1} x ... x Z_{nk}. */
AC_API ac_status ac_count_total(const char* const* moduli, size_t k, ac_text** out);
AC_API ac_status ac_count_cyclic(const char* const* moduli, size_t k, ac_text** out);
AC_API ac_status ac_count_order(const char* delta, const char* const* moduli, size_t k,
                                ac_text** out);
AC_API ac_status ac_count_isotype(const char* a, const char* b, const char* m, const char* n,
                                  ac_text** out);
AC_API ac_status ac_count_sigma(const char* t, const char* m, const char* n, ac_text** out);
AC_API ac_status ac_count_aut(const char* m, const char* n, ac_text** out);

/* kind: s2, s3, n4, n4order, aut, gauss, type-count, cyclic-order.
 * Partitions are comma-separated part lists, e.g. "2,1". */
AC_API ac_status ac_poly(const char* kind, const char* const* args, size_t nargs,
                         ac_text** out);

/* Subgroup enumeration for k = 2 or 3.  ac_enum_next stores NULL in *out
 * once the stream is exhausted.  One item per subgroup, newline-terminated. */
AC_API ac_status ac_enum_open(const char* const* moduli, size_t k, ac_enum_format format,
                              ac_enum** out);
AC_API ac_status ac_enum_next(ac_enum* e, ac_text** out);
AC_API void ac_enum_free(ac_enum* e);

/* Renders one subgroup given its key fields (5 for k = 2, 6 for k = 3). */
AC_API ac_status ac_enum_key(const char* const* moduli, size_t k, const char* const* key,
                             size_t nkey, ac_enum_format format, ac_text** out);

/* Number of subgroups an enumeration would produce. */
AC_API ac_status ac_enum_count(const char* const* moduli, size_t k, ac_text** out);

/* name: Nn (rows from..to), n4-polys, s3-poly. */
AC_API ac_status ac_table(const char* name, unsigned from, unsigned to, ac_text** out);

/* Oracle bound comes from ABELCOUNT_ORACLE_MAX_ORDER when set, else 2000.
 * Returns AC_ERR_MISMATCH with the first counterexample in *out. */
AC_API ac_status ac_oracle_verify(uint64_t max_order, const unsigned* arities,
                                  size_t narities, ac_text** out);

/* TSV report of checkpointed partial sums.  k is used by ck and fk only.
 * fit_degree > 0 appends a least-squares log-polynomial fit section. */
AC_API ac_status ac_sum(const char* series, unsigned k, uint64_t x, unsigned per_decade,
                        unsigned fit_degree, ac_text** out);

/* which: Hk, H3, C, zetaprod.  JSON report. */
AC_API ac_status ac_constants(const char* which, unsigned k, ac_text** out);

#ifdef __cplusplus
}
#endif

#endif /* ABELCOUNT_ABELCOUNT_H_ */
