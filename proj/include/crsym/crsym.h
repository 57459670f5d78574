/* Copyright 2026 The crsym Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to the crsym library. All objects are opaque handles owned by
 * the caller and released with the matching *_destroy function. Functions
 * return CRSYM_OK or an error status; the message of the most recent error
 * on the calling thread is available from crsym_last_error(). Strings handed
 * out through char** parameters are heap allocated and must be released with
 * crsym_string_free(). */

#ifndef CRSYM_CRSYM_H_
#define CRSYM_CRSYM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CRSYM_BUILDING)
#define CRSYM_API __declspec(dllexport)
#else
#define CRSYM_API __declspec(dllimport)
#endif
#else
#define CRSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crsym_status {
  CRSYM_OK = 0,
  CRSYM_ERR_INVALID_ARGUMENT = 1,
  CRSYM_ERR_INVALID_PRIME = 2,
  CRSYM_ERR_DIVISION_BY_ZERO = 3,
  CRSYM_ERR_FIELD_MISMATCH = 4,
  CRSYM_ERR_NOT_A_SUBFIELD = 5,
  CRSYM_ERR_ZERO_INPUT = 6,
  CRSYM_ERR_EVEN_CHAR_UNSUPPORTED = 7,
  CRSYM_ERR_NO_SUCH_ORDER = 8,
  CRSYM_ERR_BUDGET_EXCEEDED = 9,
  CRSYM_ERR_RANK_MISMATCH = 10,
  CRSYM_ERR_DIMENSION_MISMATCH = 11,
  CRSYM_ERR_NOT_IN_RADICAL = 12,
  CRSYM_ERR_INTERNAL_INCONSISTENCY = 13,
  CRSYM_ERR_CENSUS_INVALID = 14,
  CRSYM_ERR_TOO_SMALL = 15,
  CRSYM_ERR_NO_SUBFIELD = 16,
  CRSYM_ERR_UNSUPPORTED = 17,
  CRSYM_ERR_NOT_SYMMETRIC = 18,
  CRSYM_ERR_PARSE = 19,
  CRSYM_ERR_IO = 20,
  CRSYM_ERR_UNKNOWN = 99
} crsym_status;

typedef enum crsym_arith_op {
  CRSYM_OP_ADD = 0,
  CRSYM_OP_SUB = 1,
  CRSYM_OP_MUL = 2,
  CRSYM_OP_INV = 3,
  CRSYM_OP_POW = 4
} crsym_arith_op;

typedef struct crsym_field crsym_field;
typedef struct crsym_formspace crsym_formspace;
typedef struct crsym_partition crsym_partition;

CRSYM_API const char* crsym_version(void);
/* Identifies the modulus selection rule, and hence every element encoding. */
CRSYM_API const char* crsym_modulus_rule(void);
CRSYM_API const char* crsym_status_name(crsym_status status);
/* Message of the last failed call on this thread; "" if none. */
CRSYM_API const char* crsym_last_error(void);
CRSYM_API void crsym_string_free(char* s);

/* Fields. spec is "p^k" or a prime power "q". */
CRSYM_API crsym_status crsym_field_parse(const char* spec, crsym_field** out);
CRSYM_API void crsym_field_destroy(crsym_field* f);
CRSYM_API uint32_t crsym_field_order(const crsym_field* f);
CRSYM_API crsym_status crsym_field_info_json(const crsym_field* f, char** json);
/* b is ignored for INV and is the exponent for POW. */
CRSYM_API crsym_status crsym_field_arith(const crsym_field* f, crsym_arith_op op, uint32_t a, uint64_t b,
                                         uint32_t* out);

/* Constructions. Unused parameters are ignored. */
typedef struct crsym_construct_params {
  uint64_t q;
  uint32_t n;
  uint32_t m;
  uint32_t t;
} crsym_construct_params;

/* kind: trace | distinct-radical | hyperbolic | positive2t | rank4-f3 (alias ward) */
CRSYM_API crsym_status crsym_construct_space(const char* kind, const crsym_construct_params* params,
                                             crsym_formspace** out);
/* kind: spread | odd-partition */
CRSYM_API crsym_status crsym_construct_partition(const char* kind, const crsym_construct_params* params,
                                                 crsym_partition** out);

/* Form spaces in the text format "p k n d" / modulus / d Gram matrices. */
CRSYM_API crsym_status crsym_formspace_parse(const char* text, crsym_formspace** out);
CRSYM_API crsym_status crsym_formspace_load(const char* path, crsym_formspace** out);
CRSYM_API crsym_status crsym_formspace_format(const crsym_formspace* m, char** text);
CRSYM_API crsym_status crsym_formspace_save(const crsym_formspace* m, const char* path);
CRSYM_API void crsym_formspace_destroy(crsym_formspace* m);
CRSYM_API size_t crsym_formspace_dim(const crsym_formspace* m);
CRSYM_API size_t crsym_formspace_n(const crsym_formspace* m);
/* Type census, rank histogram, and both common isotropic counts. agreement
 * may be NULL. */
CRSYM_API crsym_status crsym_census_json(const crsym_formspace* m, char** json, int* agreement);

/* Partitions in the text format "p k n t" / modulus / t pieces. */
CRSYM_API crsym_status crsym_partition_parse(const char* text, crsym_partition** out);
CRSYM_API crsym_status crsym_partition_load(const char* path, crsym_partition** out);
CRSYM_API crsym_status crsym_partition_format(const crsym_partition* p, char** text);
CRSYM_API crsym_status crsym_partition_save(const crsym_partition* p, const char* path);
CRSYM_API void crsym_partition_destroy(crsym_partition* p);
CRSYM_API crsym_status crsym_partition_check_json(const crsym_partition* p, char** json, int* valid);

/* suite: core | rank4-f3 (alias ward) | bounds | all. Writes a JSON array of check results. */
CRSYM_API crsym_status crsym_verify_suite_json(const char* suite, unsigned jobs, char** json, int* all_passed);

typedef struct crsym_search_params {
  uint64_t q;
  uint32_t n;
  uint32_t r;
  const char* mode; /* plain | all-hyperbolic | all-positive | distinct-radicals */
  uint64_t budget;  /* 0 selects the default */
  int exhaustive;
  unsigned jobs;
  uint64_t rng_seed;
} crsym_search_params;

/* seed may be NULL. best_dim may be NULL. */
CRSYM_API crsym_status crsym_search_json(const crsym_search_params* params, const crsym_formspace* seed, char** json,
                                         uint32_t* best_dim);

#ifdef __cplusplus
}
#endif

#endif /* CRSYM_CRSYM_H_ */
